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

#include "asrx/sfl.hpp"

#include <algorithm>
#include <stdexcept>

namespace asrx {

SflTally tally(std::span<const LabeledMutant> mutants, int n_frames) {
  if (n_frames < 0) throw std::invalid_argument("tally: negative frame count");
  SflTally t;
  t.rows.resize(static_cast<size_t>(n_frames));
  std::vector<bool> masked(static_cast<size_t>(n_frames));
  for (const LabeledMutant& m : mutants) {
    std::fill(masked.begin(), masked.end(), false);
    for (int f : m.mask.frames) {
      if (f < 0 || f >= n_frames) throw std::invalid_argument("tally: mask index out of range");
      masked[static_cast<size_t>(f)] = true;
    }
    const bool correct = m.verdict.label == Label::kCorrect;
    for (int f = 0; f < n_frames; ++f) {
      SflCounts& row = t.rows[static_cast<size_t>(f)];
      if (masked[static_cast<size_t>(f)])
        (correct ? row.masked_correct : row.masked_incorrect)++;
      else
        (correct ? row.unmasked_correct : row.unmasked_incorrect)++;
    }
  }
  return t;
}

double tarantula(const SflCounts& c) {
  const long up = c.unmasked_correct + c.masked_correct;      // total Correct exposures
  const long uf = c.unmasked_incorrect + c.masked_incorrect;  // total Incorrect exposures
  const double pass_ratio = up == 0 ? 0.0 : static_cast<double>(c.unmasked_correct) / up;
  const double fail_ratio = uf == 0 ? 0.0 : static_cast<double>(c.unmasked_incorrect) / uf;
  const double denom = pass_ratio + fail_ratio;
  return denom == 0.0 ? 0.0 : pass_ratio / denom;
}

FrameRanking rank_sfl(std::span<const LabeledMutant> mutants, int n_frames, SflMeasure measure) {
  const SflTally t = tally(mutants, n_frames);
  std::vector<double> scores(t.rows.size());
  for (size_t i = 0; i < t.rows.size(); ++i) scores[i] = measure(t.rows[i]);
  return make_ranking(scores);
}

}  // namespace asrx
