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

#ifndef ASRX_SFL_HPP
#define ASRX_SFL_HPP

#include <span>
#include <vector>

#include "asrx/mutation.hpp"
#include "asrx/ranking.hpp"

namespace asrx {

/// Per-frame mutant statistics. The four counts sum to the mutant set size
/// for every frame.
struct SflCounts {
  long unmasked_correct = 0;    // frame present, transcript classified Correct
  long unmasked_incorrect = 0;  // frame present, Incorrect
  long masked_correct = 0;      // frame zeroed, Correct
  long masked_incorrect = 0;    // frame zeroed, Incorrect
};

struct SflTally {
  std::vector<SflCounts> rows;  // one per frame
};

SflTally tally(std::span<const LabeledMutant> mutants, int n_frames);

/// Fault-localization measure contract; any per-frame score works here.
using SflMeasure = double (*)(const SflCounts&);

/// Tarantula, oriented so that presence in Correct mutants and absence in
/// Incorrect ones maximize the score:
///   P = uc/(uc+mc), F = ui/(ui+mi), score = P/(P+F),
/// with any zero-denominator ratio (and the P+F == 0 case) defined as 0.
double tarantula(const SflCounts& counts);

FrameRanking rank_sfl(std::span<const LabeledMutant> mutants, int n_frames,
                      SflMeasure measure = tarantula);

}  // namespace asrx

#endif  // ASRX_SFL_HPP
