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

#include <cstdio>
#include <unistd.h>

#include "asrx/toy_asr.hpp"
#include "support/test_support.hpp"

using namespace asrx;

TEST_CASE("toy transcription thresholds audible span fractions") {
  ToyAsrSpec spec;
  spec.rho = 0.5;
  spec.words = {{"alpha", 0, 4}, {"beta", 5, 7}};
  const Audio audio = make_toy_audio(spec, 8, 4);
  const FrameGrid grid = frame_grid(audio, 4);

  SUBCASE("nothing masked emits every word in span order") {
    CHECK(toy_transcribe(spec, audio, grid).tokens ==
          std::vector<std::string>{"alpha", "beta"});
  }
  SUBCASE("a word drops when too much of its span is silent") {
    const Audio masked = apply_mask(audio, grid, make_mask({0, 1, 2}, grid));
    CHECK(toy_transcribe(spec, masked, grid).tokens == std::vector<std::string>{"beta"});
  }
  SUBCASE("exactly rho of the span is enough") {
    const Audio masked = apply_mask(audio, grid, make_mask({0, 1}, grid));
    CHECK(toy_transcribe(spec, masked, grid).tokens ==
          std::vector<std::string>{"alpha", "beta"});
  }
  SUBCASE("everything masked transcribes to nothing") {
    const Audio masked = apply_mask(audio, grid, make_mask({0, 1, 2, 3, 4, 5, 6, 7}, grid));
    CHECK(toy_transcribe(spec, masked, grid).empty());
  }
}

TEST_CASE("unmasking frames never removes tokens") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const asrx_test::ToyInstance inst = asrx_test::random_toy_instance(rng);
    std::vector<int> some, fewer;
    for (int f = 0; f < inst.n_frames; ++f) {
      const auto roll = rng.below(3);
      if (roll == 0) fewer.push_back(f);
      if (roll <= 1) some.push_back(f);  // superset of fewer
    }
    const Transcript more_masked =
        toy_transcribe(inst.spec, apply_mask(inst.audio, inst.grid, make_mask(some, inst.grid)),
                       inst.grid);
    const Transcript less_masked =
        toy_transcribe(inst.spec, apply_mask(inst.audio, inst.grid, make_mask(fewer, inst.grid)),
                       inst.grid);
    // Every token present under heavier masking survives lighter masking.
    size_t found = 0;
    for (const auto& tok : more_masked.tokens)
      for (const auto& other : less_masked.tokens)
        if (tok == other) {
          ++found;
          break;
        }
    CHECK(found == more_masked.tokens.size());
  }
}

TEST_CASE("brute-force minimal explanations on known instances") {
  SUBCASE("one word over four frames at rho 0.5 needs two frames") {
    ToyAsrSpec spec;
    spec.rho = 0.5;
    spec.words = {{"w", 0, 4}};
    const Audio audio = make_toy_audio(spec, 4, 4);
    const FrameGrid grid = frame_grid(audio, 4);
    const MinimalExplanation min =
        brute_force_min_explanation(spec, audio, grid, {Metric::kWer, 0.0});
    CHECK(min.size == 2);
    CHECK(min.frames == std::vector<int>{0, 1});  // lexicographically first witness
  }
  SUBCASE("two rho-1 words of two frames each need all four") {
    ToyAsrSpec spec;
    spec.rho = 1.0;
    spec.words = {{"a", 0, 2}, {"b", 2, 4}};
    const Audio audio = make_toy_audio(spec, 4, 4);
    const FrameGrid grid = frame_grid(audio, 4);
    const MinimalExplanation min =
        brute_force_min_explanation(spec, audio, grid, {Metric::kWer, 0.0});
    CHECK(min.size == 4);
  }
  SUBCASE("tiny rho needs a single frame") {
    ToyAsrSpec spec;
    spec.rho = 0.05;
    spec.words = {{"w", 0, 8}};
    const Audio audio = make_toy_audio(spec, 8, 4);
    const FrameGrid grid = frame_grid(audio, 4);
    const MinimalExplanation min =
        brute_force_min_explanation(spec, audio, grid, {Metric::kWer, 0.0});
    CHECK(min.size == 1);
  }
  SUBCASE("enumeration limit") {
    ToyAsrSpec spec;
    spec.rho = 1.0;
    spec.words = {{"w", 0, 21}};
    const Audio audio = make_toy_audio(spec, 21, 2);
    const FrameGrid grid = frame_grid(audio, 2);
    CHECK_THROWS_AS(brute_force_min_explanation(spec, audio, grid, {Metric::kWer, 0.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("toy spec json round-trips through a file") {
  ToyAsrSpec spec;
  spec.rho = 0.75;
  spec.words = {{"first", 0, 3}, {"second", 4, 6}};
  const std::string path =
      "/tmp/asrx_toyspec_" + std::to_string(::getpid()) + ".json";
  save_toy_spec(path, spec);
  const ToyAsrSpec back = load_toy_spec(path);
  std::remove(path.c_str());
  CHECK(back.rho == spec.rho);
  REQUIRE(back.words.size() == 2);
  CHECK(back.words[1].token == "second");
  CHECK(back.words[1].start_frame == 4);
  CHECK(back.words[1].end_frame == 6);
}

TEST_CASE("toy spec validation rejects bad spans") {
  ToyAsrSpec overlapping;
  overlapping.rho = 0.5;
  overlapping.words = {{"a", 0, 3}, {"b", 2, 5}};
  CHECK_THROWS_AS(validate(overlapping, 8), std::invalid_argument);

  ToyAsrSpec out_of_range;
  out_of_range.rho = 0.5;
  out_of_range.words = {{"a", 0, 9}};
  CHECK_THROWS_AS(validate(out_of_range, 8), std::invalid_argument);

  ToyAsrSpec bad_rho;
  bad_rho.rho = 0.0;
  CHECK_THROWS_AS(validate(bad_rho, 8), std::invalid_argument);
}
