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

#ifndef ASRX_LIME_HPP
#define ASRX_LIME_HPP

#include <span>
#include <vector>

#include "asrx/mutation.hpp"
#include "asrx/ranking.hpp"

namespace asrx {

struct LimeConfig {
  double kernel_width = 0.25;  // sigma; distances are fractions in [0,1]
  double ridge_lambda = 1e-3;  // must be > 0
};

/// Weighted ridge regression with an unpenalized intercept, solved on
/// weighted-centered features: (Zc' W Zc + lambda I) beta = Zc' W yc.
struct RidgeProblem {
  int n_features = 0;
  std::vector<std::vector<double>> rows;  // one feature vector per sample
  std::vector<double> targets;
  std::vector<double> weights;
  double lambda = 0.0;
};

struct SurrogateFit {
  std::vector<double> coefficients;
  double intercept = 0.0;
};

SurrogateFit solve_weighted_ridge(const RidgeProblem& problem);

/// Local linear surrogate over mask indicators: feature z_i = 1 when frame
/// i is unmasked, target = the mutant's classification (Correct = 1,
/// Incorrect = 0), kernel weight = exp(-(d/sigma)^2) with d = fraction of
/// masked frames.
SurrogateFit fit_surrogate(std::span<const LabeledMutant> mutants, int n_frames,
                           const LimeConfig& cfg = {});

/// Frames by descending surrogate coefficient, ascending index on ties.
FrameRanking rank_lime(std::span<const LabeledMutant> mutants, int n_frames,
                       const LimeConfig& cfg = {});

}  // namespace asrx

#endif  // ASRX_LIME_HPP
