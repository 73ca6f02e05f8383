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

#include <doctest.h>

#include <string>
#include <vector>

#include "asrx/similarity.hpp"
#include "asrx/transcript.hpp"

using namespace asrx;

namespace {

// Edit distance by plain recursion, no memoization: an oracle that shares
// nothing with the DP implementation.
size_t edit_distance_recursive(const std::vector<std::string>& a,
                               const std::vector<std::string>& b, size_t i, size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  const size_t sub = edit_distance_recursive(a, b, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
  const size_t del = edit_distance_recursive(a, b, i + 1, j) + 1;
  const size_t ins = edit_distance_recursive(a, b, i, j + 1) + 1;
  return std::min({sub, del, ins});
}

Transcript from_tokens(const std::vector<std::string>& tokens) {
  std::string raw;
  for (const auto& t : tokens) {
    if (!raw.empty()) raw.push_back(' ');
    raw += t;
  }
  return make_transcript(raw);
}

}  // namespace

TEST_CASE("tokenization lowercases, splits and strips edge punctuation") {
  CHECK(tokenize("I'd like an apple") ==
        std::vector<std::string>{"i'd", "like", "an", "apple"});
  CHECK(tokenize("  Hello,   WORLD! ") == std::vector<std::string>{"hello", "world"});
  CHECK(tokenize("-- ... ") == std::vector<std::string>{});
  CHECK(tokenize("") == std::vector<std::string>{});
}

TEST_CASE("wer on worked cases") {
  CHECK(wer(from_tokens({"a", "b", "c"}), from_tokens({"a", "b", "c"})) == 0.0);
  // 1 substitution + 1 deletion over 4 reference tokens.
  CHECK(wer(make_transcript("I'd like an apple"), make_transcript("I like apple")) == 0.5);
  CHECK(wer(from_tokens({"a"}), from_tokens({})) == 1.0);
  CHECK_THROWS_AS(wer(from_tokens({}), from_tokens({"a"})), EmptyReferenceError);
}

TEST_CASE("wer equals the recursive oracle on short token pairs") {
  const std::vector<std::string> alphabet = {"a", "b", "c"};
  std::vector<std::vector<std::string>> sequences = {{}};
  for (size_t len = 1; len <= 3; ++len) {
    const size_t start = sequences.size();
    std::vector<std::vector<std::string>> next;
    for (const auto& seq : sequences)
      if (seq.size() == len - 1)
        for (const auto& sym : alphabet) {
          auto extended = seq;
          extended.push_back(sym);
          next.push_back(std::move(extended));
        }
    (void)start;
    sequences.insert(sequences.end(), next.begin(), next.end());
  }
  for (const auto& ref : sequences) {
    if (ref.empty()) continue;
    for (const auto& hyp : sequences) {
      const double expect =
          static_cast<double>(edit_distance_recursive(ref, hyp, 0, 0)) / ref.size();
      CHECK(wer(from_tokens(ref), from_tokens(hyp)) == expect);
    }
  }
}

TEST_CASE("term-frequency provider matches the hand cosine oracle") {
  TermFrequencyProvider tf;
  CHECK(semantic_similarity(from_tokens({"a", "b"}), from_tokens({"c", "d"}), tf) == 0.0);
  // cos of (1,1,0) and (1,0,1) = 1/2.
  CHECK(semantic_similarity(from_tokens({"a", "b"}), from_tokens({"a", "c"}), tf) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(semantic_similarity(make_transcript("same words"), make_transcript("same words"), tf) ==
        1.0);
  CHECK(semantic_similarity(from_tokens({"a"}), from_tokens({}), tf) == 0.0);
}

TEST_CASE("classify applies the threshold rules") {
  TermFrequencyProvider tf;

  SUBCASE("wer at zero threshold") {
    const ClassifierConfig cfg{Metric::kWer, 0.0};
    const Verdict same = classify(make_transcript("a b"), make_transcript("a b"), cfg);
    CHECK(same.score == 0.0);
    CHECK(same.label == Label::kCorrect);
    const Verdict sub = classify(make_transcript("a b"), make_transcript("a c"), cfg);
    CHECK(sub.label == Label::kIncorrect);
  }
  SUBCASE("semantic at 0.5") {
    const ClassifierConfig cfg{Metric::kSemantic, 0.5};
    const Verdict same = classify(make_transcript("x y"), make_transcript("x y"), cfg, &tf);
    CHECK(same.score == 1.0);
    CHECK(same.label == Label::kCorrect);
  }
  SUBCASE("boundary scores: semantic is strict, wer is not") {
    // cos((1,1),(1,0,1)) = 0.5 exactly -> not higher than T=0.5 -> Incorrect.
    const ClassifierConfig sem{Metric::kSemantic, 0.5};
    const Verdict at_t = classify(from_tokens({"a", "b"}), from_tokens({"a", "c"}), sem, &tf);
    CHECK(at_t.score == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(at_t.label == Label::kIncorrect);

    // wer 0.5 at T=0.5 -> Correct.
    const ClassifierConfig werc{Metric::kWer, 0.5};
    const Verdict at_w =
        classify(from_tokens({"a", "b"}), from_tokens({"a", "c"}), werc);
    CHECK(at_w.score == 0.5);
    CHECK(at_w.label == Label::kCorrect);
  }
  SUBCASE("empty hypothesis conventions") {
    const ClassifierConfig werc{Metric::kWer, 0.0};
    CHECK(classify(from_tokens({"a", "b"}), from_tokens({}), werc).score == 1.0);
    const ClassifierConfig sem{Metric::kSemantic, 0.5};
    const Verdict v = classify(from_tokens({"a", "b"}), from_tokens({}), sem, &tf);
    CHECK(v.score == 0.0);
    CHECK(v.label == Label::kIncorrect);
  }
  SUBCASE("config validation") {
    CHECK_THROWS_AS(classify(from_tokens({"a"}), from_tokens({"a"}),
                             ClassifierConfig{Metric::kSemantic, 1.5}, &tf),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify(from_tokens({"a"}), from_tokens({"a"}),
                             ClassifierConfig{Metric::kWer, -0.1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify(from_tokens({"a"}), from_tokens({"a"}),
                             ClassifierConfig{Metric::kSemantic, 0.5}, nullptr),
                    std::invalid_argument);
  }
}

TEST_CASE("classification is monotone in the score direction") {
  TermFrequencyProvider tf;
  // Hypotheses ordered by increasing semantic similarity to the reference.
  const Transcript ref = from_tokens({"a", "b", "c", "d"});
  const std::vector<Transcript> hyps = {
      from_tokens({"x", "y"}), from_tokens({"a", "x", "y", "z"}),
      from_tokens({"a", "b", "x", "y"}), from_tokens({"a", "b", "c", "x"}),
      from_tokens({"a", "b", "c", "d"})};
  const ClassifierConfig sem{Metric::kSemantic, 0.5};
  bool seen_correct = false;
  for (const auto& hyp : hyps) {
    const Verdict v = classify(ref, hyp, sem, &tf);
    if (seen_correct) CHECK(v.label == Label::kCorrect);
    if (v.label == Label::kCorrect) seen_correct = true;
  }

  // Along the same list WER decreases, so Correct is absorbing here too.
  const ClassifierConfig werc{Metric::kWer, 0.5};
  bool wer_seen_correct = false;
  for (const auto& hyp : hyps) {
    const Verdict v = classify(ref, hyp, werc);
    if (wer_seen_correct) CHECK(v.label == Label::kCorrect);
    if (v.label == Label::kCorrect) wer_seen_correct = true;
  }
}
