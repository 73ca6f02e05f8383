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

#ifndef ASRX_EXPLANATION_HPP
#define ASRX_EXPLANATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asrx/audio.hpp"
#include "asrx/ranking.hpp"
#include "asrx/service.hpp"
#include "asrx/similarity.hpp"

namespace asrx {

/// A minimal-and-sufficient frame subset: rendering the audio with every
/// frame outside `frames` masked still classifies Correct, and the greedy
/// prefix one frame shorter does not. `frames` is in rank (inclusion) order
/// and is always a prefix of `ranking`.
struct Explanation {
  std::string audio_id;
  std::string method;
  Metric metric = Metric::kWer;
  double threshold = 0.0;
  uint64_t seed = 0;
  int n_frames = 0;
  int frame_length = 0;
  FrameRanking ranking;
  std::vector<int> frames;
  double size_ratio = 0.0;
  std::string original_transcript;
  std::string explanation_transcript;
};

/// Greedy build: add frames in rank order and transcribe the complement-
/// masked audio after each addition, stopping at the first Correct verdict.
/// Terminates because the full frame set reproduces the original transcript.
Explanation build_explanation(const FrameRanking& ranking, const Audio& audio,
                              const FrameGrid& grid, TranscriptionService& service,
                              const Transcript& original, const ClassifierConfig& classifier,
                              SemanticProvider* provider, const std::string& method,
                              uint64_t seed);

/// |frames| / n_frames; smaller is better.
double size_metric(const Explanation& e);

/// Fraction of the reference explanation's frames that reappear in `other`:
/// |ref ∩ other| / |ref|. Directed; both sides must share audio and grid.
double consistency(const Explanation& reference, const Explanation& other);

nlohmann::ordered_json to_json(const Explanation& e);
Explanation explanation_from_json(const nlohmann::json& j);

}  // namespace asrx

#endif  // ASRX_EXPLANATION_HPP
