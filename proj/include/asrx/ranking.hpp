// Copyright 2026 The asrexplain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASRX_RANKING_HPP
#define ASRX_RANKING_HPP

#include <algorithm>
#include <span>
#include <vector>

namespace asrx {

struct RankedFrame {
  int frame = 0;
  double score = 0.0;
};

/// A permutation of all frames ordered by descending score, ties broken by
/// ascending frame index. Every ranker produces one of these.
using FrameRanking = std::vector<RankedFrame>;

inline FrameRanking make_ranking(std::span<const double> scores) {
  FrameRanking r(scores.size());
  for (size_t i = 0; i < scores.size(); ++i) r[i] = {static_cast<int>(i), scores[i]};
  std::sort(r.begin(), r.end(), [](const RankedFrame& a, const RankedFrame& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.frame < b.frame;
  });
  return r;
}

}  // namespace asrx

#endif  // ASRX_RANKING_HPP
