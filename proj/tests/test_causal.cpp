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

#include <cmath>
#include <set>

#include "asrx/causal.hpp"
#include "asrx/toy_asr.hpp"
#include "support/test_support.hpp"

using namespace asrx;

namespace {

SuperframeMutant sf_mutant(std::vector<int> masked, Label label) {
  SuperframeMutant m;
  std::sort(masked.begin(), masked.end());
  m.masked = std::move(masked);
  m.verdict.label = label;
  m.verdict.score = label == Label::kCorrect ? 1.0 : 0.0;
  return m;
}

struct ToyFixture {
  explicit ToyFixture(ToyAsrSpec spec_in, int n_frames)
      : spec(std::move(spec_in)),
        audio(make_toy_audio(spec, n_frames, 4)),
        grid(frame_grid(audio, 4)),
        toy(spec, 4),
        service(toy, nullptr, 1),
        original(service.original(audio)) {}

  ToyAsrSpec spec;
  Audio audio;
  FrameGrid grid;
  ToyTranscriber toy;
  TranscriptionService service;
  Transcript original;
};

}  // namespace

TEST_CASE("partitions tile the frames and stay contiguous") {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(40));
    const int count = 1 + static_cast<int>(rng.below(8));
    const Partition p = jittered_partition(n, count, rng);
    validate_partition(p, n);
    CHECK(static_cast<int>(p.size()) == std::min(count, n));
  }
}

TEST_CASE("causal mutant sets follow the budget branch") {
  ToyAsrSpec spec;
  spec.rho = 0.5;
  spec.words = {{"w", 0, 4}};

  SUBCASE("exhaustive enumeration under the budget") {
    ToyFixture fx(spec, 8);
    Rng rng(1);
    const Partition p = equal_partition(8, 4);
    const auto mutants = causal_mutants(p, fx.audio, fx.grid, fx.service, fx.original,
                                        {Metric::kWer, 0.0}, nullptr, 100, rng);
    CHECK(mutants.size() == 16);  // 2^4
    // The empty subset transcribes identically, hence Correct.
    CHECK(mutants[0].masked.empty());
    CHECK(mutants[0].verdict.label == Label::kCorrect);
    // All subsets distinct.
    std::set<std::vector<int>> distinct;
    for (const auto& m : mutants) distinct.insert(m.masked);
    CHECK(distinct.size() == 16);
  }
  SUBCASE("sampled when the subset lattice exceeds the budget") {
    ToyFixture fx(spec, 16);
    Rng rng(2);
    const Partition p = equal_partition(16, 8);
    const auto mutants = causal_mutants(p, fx.audio, fx.grid, fx.service, fx.original,
                                        {Metric::kWer, 0.0}, nullptr, 100, rng);
    CHECK(mutants.size() == 101);  // 100 sampled + empty
    CHECK(mutants[0].masked.empty());
  }
}

TEST_CASE("responsibility via the worked mutant sets") {
  const Partition p = equal_partition(8, 4);

  SUBCASE("empty subset qualifying gives responsibility 1") {
    const std::vector<SuperframeMutant> mutants = {sf_mutant({}, Label::kCorrect),
                                                   sf_mutant({0}, Label::kIncorrect)};
    const auto r = responsibility(p, mutants);
    for (double v : r) CHECK(v == 1.0);  // k = 0 via the empty mutant
  }
  SUBCASE("best qualifying mutant masking one superframe gives 1/2") {
    const std::vector<SuperframeMutant> mutants = {sf_mutant({1}, Label::kCorrect),
                                                   sf_mutant({1, 2}, Label::kCorrect)};
    const auto r = responsibility(p, mutants);
    CHECK(r[0] == 0.5);  // min diff = 1 (mutant {1})
    CHECK(r[3] == 0.5);
    CHECK(r[2] == 0.5);  // only {1} leaves 2 unmasked
    CHECK(r[1] == 0.0);  // 1 is masked in every Correct mutant
  }
  SUBCASE("superframe unmasked only in Incorrect mutants gets 0") {
    const std::vector<SuperframeMutant> mutants = {sf_mutant({0, 1}, Label::kCorrect),
                                                   sf_mutant({2}, Label::kIncorrect)};
    const auto r = responsibility(p, mutants);
    CHECK(r[0] == 0.0);
    CHECK(r[1] == 0.0);
    CHECK(r[2] == doctest::Approx(1.0 / 3.0));
    CHECK(r[3] == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("responsibility values are always 1/(k+1) or zero") {
  Rng rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(8));
    const Partition p = equal_partition(2 * m, m);
    std::vector<SuperframeMutant> mutants;
    const int count = 1 + static_cast<int>(rng.below(30));
    for (int i = 0; i < count; ++i) {
      std::vector<int> masked;
      for (int j = 0; j < m; ++j)
        if (rng.next() & 1) masked.push_back(j);
      mutants.push_back(
          sf_mutant(std::move(masked), rng.next() & 1 ? Label::kCorrect : Label::kIncorrect));
    }
    for (double v : responsibility(p, mutants)) {
      if (v == 0.0) continue;
      const double k = 1.0 / v - 1.0;
      CHECK(std::abs(k - std::round(k)) < 1e-9);
      CHECK(k >= 0.0);
    }
  }
}

TEST_CASE("witness check separates the sole causal frame") {
  // Frame 2 of 4 is the only cause: the word is exactly that frame.
  ToyAsrSpec spec;
  spec.rho = 1.0;
  spec.words = {{"w", 2, 3}};
  ToyFixture fx(spec, 4);

  CausalConfig cfg;
  cfg.seed = 5;

  SUBCASE("with the witness condition the cause is strictly maximal") {
    const FrameRanking r = refine_and_rank(fx.audio, fx.grid, fx.service, fx.original,
                                           {Metric::kWer, 0.0}, nullptr, cfg);
    REQUIRE(r.size() == 4);
    CHECK(r[0].frame == 2);
    CHECK(r[0].score > r[1].score);  // strictly maximal
  }
  SUBCASE("without it every superframe is vacuously responsible") {
    cfg.witness_check = false;
    const FrameRanking r = refine_and_rank(fx.audio, fx.grid, fx.service, fx.original,
                                           {Metric::kWer, 0.0}, nullptr, cfg);
    // The never-masked empty mutant gives every superframe k = 0, so all
    // scores tie and the ranking is index order.
    for (size_t i = 0; i < r.size(); ++i) CHECK(r[i].frame == static_cast<int>(i));
    CHECK(r.front().score == r.back().score);
  }
}

TEST_CASE("degenerate causal instances") {
  SUBCASE("single-frame audio ranks trivially") {
    ToyAsrSpec spec;
    spec.rho = 1.0;
    spec.words = {{"w", 0, 1}};
    ToyFixture fx(spec, 1);
    const FrameRanking r = refine_and_rank(fx.audio, fx.grid, fx.service, fx.original,
                                           {Metric::kWer, 0.0}, nullptr, {});
    REQUIRE(r.size() == 1);
    CHECK(r[0].frame == 0);
  }
  SUBCASE("labels never flip: ranking degenerates to index order") {
    // A WER threshold of 1 accepts even the empty transcript, so no mutant
    // ever classifies Incorrect, no witness exists, every responsibility is
    // zero and the tie-break produces ascending frames.
    ToyAsrSpec spec;
    spec.rho = 0.5;
    spec.words = {{"w", 0, 8}};
    ToyFixture fx(spec, 8);
    CausalConfig cfg;
    cfg.depth_limit = 2;
    const FrameRanking r = refine_and_rank(fx.audio, fx.grid, fx.service, fx.original,
                                           {Metric::kWer, 1.0}, nullptr, cfg);
    REQUIRE(r.size() == 8);
    for (size_t i = 0; i < r.size(); ++i) {
      CHECK(r[i].frame == static_cast<int>(i));
      CHECK(r[i].score == 0.0);
    }
  }
}

TEST_CASE("refine_and_rank is deterministic in the seed") {
  ToyAsrSpec spec;
  spec.rho = 0.5;
  spec.words = {{"aa", 1, 5}, {"bb", 8, 12}};
  ToyFixture fx1(spec, 14), fx2(spec, 14);
  CausalConfig cfg;
  cfg.seed = 123;
  const FrameRanking a = refine_and_rank(fx1.audio, fx1.grid, fx1.service, fx1.original,
                                         {Metric::kWer, 0.0}, nullptr, cfg);
  const FrameRanking b = refine_and_rank(fx2.audio, fx2.grid, fx2.service, fx2.original,
                                         {Metric::kWer, 0.0}, nullptr, cfg);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].frame == b[i].frame);
    CHECK(a[i].score == b[i].score);
  }
}

TEST_CASE("diff counts superframes of the partition in force, not frames") {
  // Two superframes of four frames each; a Correct mutant masking one
  // superframe must yield k = 1 (not 4) for the other.
  const Partition p = equal_partition(8, 2);
  const std::vector<SuperframeMutant> mutants = {sf_mutant({0}, Label::kCorrect)};
  const auto r = responsibility(p, mutants);
  CHECK(r[1] == 0.5);  // k = 1 superframe masked
  CHECK(r[0] == 0.0);  // masked in the only Correct mutant
}
