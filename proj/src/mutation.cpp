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

#include "asrx/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asrx/rng.hpp"

namespace asrx {

void validate(const MutationConfig& cfg) {
  if (cfg.set_size < 1) throw std::invalid_argument("mutation: set_size must be >= 1");
  if (cfg.mu < 0.0) throw std::invalid_argument("mutation: mu must be >= 0");
  if (cfg.alpha0 < 0.0 || cfg.alpha0 > 1.0)
    throw std::invalid_argument("mutation: alpha0 must be in [0,1]");
}

namespace {
int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }
}  // namespace

std::vector<LabeledMutant> generate_mutants(const Audio& audio, const FrameGrid& grid,
                                            TranscriptionService& service,
                                            const Transcript& original,
                                            const ClassifierConfig& classifier,
                                            SemanticProvider* provider,
                                            const MutationConfig& cfg) {
  validate(cfg);
  if (grid.n_frames < 1) throw std::invalid_argument("generate_mutants: audio has no frames");
  if (original.empty())
    throw std::invalid_argument("generate_mutants: original transcript is empty");

  Rng rng(derive_seed(cfg.seed, "mutation"));
  double alpha = std::clamp(cfg.alpha0, 0.0, 1.0);

  std::vector<LabeledMutant> mutants;
  mutants.reserve(static_cast<size_t>(cfg.set_size));
  for (int i = 0; i < cfg.set_size; ++i) {
    const int n_masked =
        std::clamp(round_half_up(alpha * grid.n_frames), 0, grid.n_frames);
    LabeledMutant m;
    m.mask = make_mask(sample_without_replacement(grid.n_frames, n_masked, rng), grid);
    m.transcript = service.masked(audio, grid, m.mask);
    m.verdict = classify(original, m.transcript, classifier, provider);
    alpha = m.verdict.label == Label::kIncorrect ? std::max(alpha - cfg.mu, 0.0)
                                                 : std::min(alpha + cfg.mu, 1.0);
    mutants.push_back(std::move(m));
  }
  return mutants;
}

}  // namespace asrx
