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

#ifndef ASRX_TOY_ASR_HPP
#define ASRX_TOY_ASR_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asrx/audio.hpp"
#include "asrx/similarity.hpp"
#include "asrx/transcriber.hpp"

namespace asrx {

/// Deterministic transcriber with known causal structure: word w spanning
/// frames [start, end) is emitted iff at least a fraction rho of its frames
/// carry non-silent (not-all-zero) samples. Serves as a desk-scale stand-in
/// for a real speech recognizer in tests and offline experiments.
struct ToyWord {
  std::string token;
  int start_frame = 0;
  int end_frame = 0;  // exclusive
};

struct ToyAsrSpec {
  double rho = 1.0;  // recognition fraction in (0,1]
  std::vector<ToyWord> words;
};

/// Spans must be non-empty, disjoint, ordered and inside the grid.
void validate(const ToyAsrSpec& spec, int n_frames);

Transcript toy_transcribe(const ToyAsrSpec& spec, const Audio& audio, const FrameGrid& grid);

/// Synthetic audio for a spec: word spans hold a non-zero constant, frames
/// outside any word are digital silence.
Audio make_toy_audio(const ToyAsrSpec& spec, int n_frames, int frame_length,
                     int sample_rate = 16000);

class ToyTranscriber final : public Transcriber {
 public:
  ToyTranscriber(ToyAsrSpec spec, int frame_length, std::string id = "");
  std::string id() const override { return id_; }
  Capabilities capabilities() const override { return {.concurrency_safe = true}; }
  Transcript transcribe(const Audio& audio) override;
  const ToyAsrSpec& spec() const { return spec_; }

 private:
  ToyAsrSpec spec_;
  int frame_length_;
  std::string id_;
};

struct MinimalExplanation {
  int size = 0;
  std::vector<int> frames;
};

/// Exhaustive minimal-sufficient-subset oracle: enumerates frame subsets by
/// increasing cardinality (lexicographic within a cardinality) and returns
/// the first whose complement-masked audio classifies Correct. Limited to
/// n_frames <= 20.
MinimalExplanation brute_force_min_explanation(const ToyAsrSpec& spec, const Audio& audio,
                                               const FrameGrid& grid,
                                               const ClassifierConfig& classifier,
                                               SemanticProvider* provider = nullptr);

nlohmann::ordered_json to_json(const ToyAsrSpec& spec);
ToyAsrSpec toy_spec_from_json(const nlohmann::json& j);
ToyAsrSpec load_toy_spec(const std::string& path);
void save_toy_spec(const std::string& path, const ToyAsrSpec& spec);

}  // namespace asrx

#endif  // ASRX_TOY_ASR_HPP
