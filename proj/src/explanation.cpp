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

#include "asrx/explanation.hpp"

#include <algorithm>
#include <stdexcept>

namespace asrx {

Explanation build_explanation(const FrameRanking& ranking, const Audio& audio,
                              const FrameGrid& grid, TranscriptionService& service,
                              const Transcript& original, const ClassifierConfig& classifier,
                              SemanticProvider* provider, const std::string& method,
                              uint64_t seed) {
  if (static_cast<int>(ranking.size()) != grid.n_frames)
    throw std::invalid_argument("build_explanation: ranking does not cover all frames");
  if (original.empty())
    throw std::invalid_argument("build_explanation: original transcript is empty");

  Explanation e;
  e.audio_id = audio.id_hex();
  e.method = method;
  e.metric = classifier.metric;
  e.threshold = classifier.threshold;
  e.seed = seed;
  e.n_frames = grid.n_frames;
  e.frame_length = grid.frame_length;
  e.ranking = ranking;
  e.original_transcript = original.raw;

  for (const RankedFrame& rf : ranking) {
    e.frames.push_back(rf.frame);
    const FrameMask complement = complement_mask(e.frames, grid);
    const Transcript t = service.masked(audio, grid, complement);
    const Verdict v = classify(original, t, classifier, provider);
    if (v.label == Label::kCorrect) {
      e.explanation_transcript = t.raw;
      e.size_ratio = static_cast<double>(e.frames.size()) / grid.n_frames;
      return e;
    }
  }
  // Unreachable: with every frame included the complement is empty, the
  // rendered audio is the original, and identical transcripts classify
  // Correct under both metrics.
  throw std::logic_error("build_explanation: full frame set did not classify Correct");
}

double size_metric(const Explanation& e) { return e.size_ratio; }

double consistency(const Explanation& reference, const Explanation& other) {
  if (reference.audio_id != other.audio_id || reference.n_frames != other.n_frames ||
      reference.frame_length != other.frame_length)
    throw std::invalid_argument("consistency: explanations are over different audio or grids");
  if (reference.frames.empty())
    throw std::invalid_argument("consistency: reference explanation is empty");
  std::vector<int> a = reference.frames, b = other.frames;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(a.size());
}

nlohmann::ordered_json to_json(const Explanation& e) {
  nlohmann::ordered_json j;
  j["audio_id"] = e.audio_id;
  j["method"] = e.method;
  j["metric"] = metric_name(e.metric);
  j["threshold"] = e.threshold;
  j["seed"] = e.seed;
  j["n_frames"] = e.n_frames;
  j["frame_length"] = e.frame_length;
  auto ranking = nlohmann::ordered_json::array();
  for (const RankedFrame& rf : e.ranking) ranking.push_back({rf.frame, rf.score});
  j["ranking"] = std::move(ranking);
  j["explanation_frames"] = e.frames;
  j["size_ratio"] = e.size_ratio;
  j["original_transcript"] = e.original_transcript;
  j["explanation_transcript"] = e.explanation_transcript;
  return j;
}

Explanation explanation_from_json(const nlohmann::json& j) {
  Explanation e;
  e.audio_id = j.at("audio_id").get<std::string>();
  e.method = j.at("method").get<std::string>();
  e.metric = metric_from_name(j.at("metric").get<std::string>());
  e.threshold = j.at("threshold").get<double>();
  e.seed = j.at("seed").get<uint64_t>();
  e.n_frames = j.at("n_frames").get<int>();
  e.frame_length = j.at("frame_length").get<int>();
  for (const auto& pair : j.at("ranking"))
    e.ranking.push_back({pair.at(0).get<int>(), pair.at(1).get<double>()});
  e.frames = j.at("explanation_frames").get<std::vector<int>>();
  e.size_ratio = j.at("size_ratio").get<double>();
  e.original_transcript = j.at("original_transcript").get<std::string>();
  e.explanation_transcript = j.at("explanation_transcript").get<std::string>();
  return e;
}

}  // namespace asrx
