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

#include "asrx/similarity.hpp"

#include <algorithm>
#include <cmath>

namespace asrx {

std::string metric_name(Metric m) { return m == Metric::kWer ? "wer" : "semantic"; }

Metric metric_from_name(const std::string& name) {
  if (name == "wer") return Metric::kWer;
  if (name == "semantic") return Metric::kSemantic;
  throw std::invalid_argument("unknown similarity metric: " + name);
}

void validate(const ClassifierConfig& cfg) {
  if (cfg.metric == Metric::kSemantic) {
    if (cfg.threshold < 0.0 || cfg.threshold > 1.0)
      throw std::invalid_argument("semantic threshold must be in [0,1]");
  } else if (cfg.threshold < 0.0) {
    throw std::invalid_argument("wer threshold must be >= 0");
  }
}

double wer(const Transcript& reference, const Transcript& hypothesis) {
  const auto& ref = reference.tokens;
  const auto& hyp = hypothesis.tokens;
  if (ref.empty()) throw EmptyReferenceError("wer: reference transcript is empty");

  // Levenshtein over tokens, two-row DP.
  const size_t n = ref.size(), m = hyp.size();
  std::vector<size_t> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      const size_t sub = prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[m]) / static_cast<double>(n);
}

namespace {

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  const size_t n = std::max(a.size(), b.size());
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    dot += x * y;
    na += x * x;
    nb += y * y;
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

double semantic_similarity(const Transcript& reference, const Transcript& hypothesis,
                           SemanticProvider& provider) {
  if (reference.tokens == hypothesis.tokens) return 1.0;
  const std::vector<double> a = provider.embed(reference.normalized());
  const std::vector<double> b = provider.embed(hypothesis.normalized());
  return std::clamp(cosine(a, b), 0.0, 1.0);
}

Verdict classify(const Transcript& reference, const Transcript& hypothesis,
                 const ClassifierConfig& cfg, SemanticProvider* provider) {
  validate(cfg);
  Verdict v;
  if (cfg.metric == Metric::kWer) {
    v.score = wer(reference, hypothesis);
    v.label = v.score <= cfg.threshold ? Label::kCorrect : Label::kIncorrect;
  } else {
    if (provider == nullptr)
      throw std::invalid_argument("classify: semantic metric requires a provider");
    v.score = semantic_similarity(reference, hypothesis, *provider);
    v.label = v.score > cfg.threshold ? Label::kCorrect : Label::kIncorrect;
  }
  return v;
}

std::vector<double> TermFrequencyProvider::embed(const std::string& text) {
  const std::vector<std::string> tokens = tokenize(text);
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& tok : tokens) vocab_.emplace(tok, vocab_.size());
  // Dimensions are only ever appended, so vectors embedded earlier read as
  // zero in the new dimensions and cosines stay consistent.
  std::vector<double> v(vocab_.size(), 0.0);
  for (const auto& tok : tokens) v[vocab_.at(tok)] += 1.0;
  return v;
}

}  // namespace asrx
