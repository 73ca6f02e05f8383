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

#ifndef ASRX_SIMILARITY_HPP
#define ASRX_SIMILARITY_HPP

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "asrx/transcript.hpp"

namespace asrx {

enum class Label { kCorrect, kIncorrect };
enum class Metric { kWer, kSemantic };

std::string metric_name(Metric m);
Metric metric_from_name(const std::string& name);

struct ClassifierConfig {
  Metric metric = Metric::kWer;
  double threshold = 0.0;
};

/// Rejects semantic thresholds outside [0,1] and negative WER thresholds.
void validate(const ClassifierConfig& cfg);

struct Verdict {
  double score = 0.0;
  Label label = Label::kIncorrect;
};

struct EmptyReferenceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ProviderError : public std::runtime_error {
 public:
  ProviderError(const std::string& provider, const std::string& what)
      : std::runtime_error(provider + ": " + what), provider_(provider) {}
  const std::string& provider() const { return provider_; }

 private:
  std::string provider_;
};

/// Word error rate: (insertions + deletions + substitutions) / |reference|
/// with a minimal token-level edit script. The first argument is always the
/// original transcription. Throws EmptyReferenceError when |reference| = 0.
double wer(const Transcript& reference, const Transcript& hypothesis);

/// Maps normalized text to an embedding vector. Providers that embed
/// incrementally (growing vocabularies and the like) must either lock
/// internally or report thread_safe() == false, in which case callers
/// serialize access.
class SemanticProvider {
 public:
  virtual ~SemanticProvider() = default;
  virtual std::string name() const = 0;
  virtual bool thread_safe() const { return false; }
  virtual std::vector<double> embed(const std::string& text) = 0;
};

/// Cosine of the provider's embeddings, clamped to [0,1]. Identical token
/// sequences score exactly 1.0; a zero-norm side scores 0.0.
double semantic_similarity(const Transcript& reference, const Transcript& hypothesis,
                           SemanticProvider& provider);

/// Correct/Incorrect under the configured metric and threshold T:
/// semantic scores are similarities (Correct iff score > T), WER is a
/// distance (Correct iff score <= T).
Verdict classify(const Transcript& reference, const Transcript& hypothesis,
                 const ClassifierConfig& cfg, SemanticProvider* provider = nullptr);

/// Bag-of-words term-frequency embeddings over a vocabulary grown on the
/// fly. Fully offline stand-in for a sentence-embedding service; cosine
/// scores are invariant to the order the vocabulary was discovered in.
class TermFrequencyProvider final : public SemanticProvider {
 public:
  std::string name() const override { return "term-frequency"; }
  bool thread_safe() const override { return true; }
  std::vector<double> embed(const std::string& text) override;

 private:
  std::mutex mu_;
  std::map<std::string, size_t> vocab_;
};

}  // namespace asrx

#endif  // ASRX_SIMILARITY_HPP
