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

#include "asrx/lime.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace asrx {

SurrogateFit solve_weighted_ridge(const RidgeProblem& p) {
  if (p.lambda <= 0.0) throw std::invalid_argument("ridge: lambda must be > 0");
  const auto n = static_cast<Eigen::Index>(p.rows.size());
  const auto d = static_cast<Eigen::Index>(p.n_features);
  if (n < 2) throw std::invalid_argument("ridge: need at least 2 samples");
  if (p.targets.size() != p.rows.size() || p.weights.size() != p.rows.size())
    throw std::invalid_argument("ridge: rows/targets/weights size mismatch");

  Eigen::MatrixXd Z(n, d);
  Eigen::VectorXd y(n), w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = p.rows[static_cast<size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != d)
      throw std::invalid_argument("ridge: feature row has wrong width");
    for (Eigen::Index j = 0; j < d; ++j) Z(i, j) = row[static_cast<size_t>(j)];
    y(i) = p.targets[static_cast<size_t>(i)];
    w(i) = p.weights[static_cast<size_t>(i)];
    if (!(w(i) >= 0.0)) throw std::invalid_argument("ridge: weights must be non-negative");
  }
  const double wsum = w.sum();
  if (wsum <= 0.0) throw std::invalid_argument("ridge: total weight must be positive");

  // A constant target carries no signal; in exact arithmetic the centered
  // system has a zero right-hand side, so return the zero solution outright
  // rather than float noise.
  if (y.minCoeff() == y.maxCoeff()) {
    SurrogateFit flat;
    flat.coefficients.assign(static_cast<size_t>(d), 0.0);
    flat.intercept = y(0);
    return flat;
  }

  const Eigen::RowVectorXd z_mean = (w.transpose() * Z) / wsum;
  const double y_mean = w.dot(y) / wsum;
  const Eigen::MatrixXd Zc = Z.rowwise() - z_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;

  const Eigen::MatrixXd A = Zc.transpose() * w.asDiagonal() * Zc +
                            p.lambda * Eigen::MatrixXd::Identity(d, d);
  const Eigen::VectorXd b = Zc.transpose() * (w.array() * yc.array()).matrix();
  const Eigen::VectorXd beta = A.ldlt().solve(b);

  SurrogateFit fit;
  fit.coefficients.assign(beta.data(), beta.data() + d);
  fit.intercept = y_mean - z_mean * beta;
  return fit;
}

SurrogateFit fit_surrogate(std::span<const LabeledMutant> mutants, int n_frames,
                           const LimeConfig& cfg) {
  if (n_frames < 1) throw std::invalid_argument("lime: need at least one frame");
  if (mutants.size() < 2) throw std::invalid_argument("lime: need at least 2 mutants");
  if (cfg.ridge_lambda <= 0.0) throw std::invalid_argument("lime: lambda must be > 0");

  RidgeProblem p;
  p.n_features = n_frames;
  p.lambda = cfg.ridge_lambda;
  p.rows.reserve(mutants.size());
  for (const LabeledMutant& m : mutants) {
    std::vector<double> z(static_cast<size_t>(n_frames), 1.0);
    for (int f : m.mask.frames) z[static_cast<size_t>(f)] = 0.0;
    p.rows.push_back(std::move(z));
    p.targets.push_back(m.verdict.label == Label::kCorrect ? 1.0 : 0.0);
    const double d = static_cast<double>(m.mask.size()) / n_frames;
    const double t = d / cfg.kernel_width;
    p.weights.push_back(std::exp(-t * t));
  }
  return solve_weighted_ridge(p);
}

FrameRanking rank_lime(std::span<const LabeledMutant> mutants, int n_frames,
                       const LimeConfig& cfg) {
  const SurrogateFit fit = fit_surrogate(mutants, n_frames, cfg);
  return make_ranking(fit.coefficients);
}

}  // namespace asrx
