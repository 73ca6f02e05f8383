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

#ifndef ASRX_MUTATION_HPP
#define ASRX_MUTATION_HPP

#include <cstdint>
#include <vector>

#include "asrx/audio.hpp"
#include "asrx/service.hpp"
#include "asrx/similarity.hpp"

namespace asrx {

struct MutationConfig {
  double alpha0 = 0.05;  // initial fraction of frames masked per mutant
  double mu = 0.01;      // schedule step
  int set_size = 100;
  uint64_t seed = 0;
};

void validate(const MutationConfig& cfg);

struct LabeledMutant {
  FrameMask mask;
  Transcript transcript;
  Verdict verdict;
};

/// Draws `set_size` mutants with the adaptive masking-rate schedule: mutant
/// i masks round(alpha_i * n_frames) distinct frames sampled uniformly
/// without replacement; after an Incorrect mutant alpha decreases by mu,
/// after a Correct one it increases by mu, clamped to [0,1]. The draw is
/// inherently sequential because alpha depends on the previous verdict.
/// Repeated masks are kept (the cache absorbs the duplicate transcriptions).
std::vector<LabeledMutant> generate_mutants(const Audio& audio, const FrameGrid& grid,
                                            TranscriptionService& service,
                                            const Transcript& original,
                                            const ClassifierConfig& classifier,
                                            SemanticProvider* provider,
                                            const MutationConfig& cfg);

}  // namespace asrx

#endif  // ASRX_MUTATION_HPP
