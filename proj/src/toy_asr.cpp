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

#include "asrx/toy_asr.hpp"

#include <algorithm>
#include <stdexcept>

#include "asrx/util.hpp"

namespace asrx {

void validate(const ToyAsrSpec& spec, int n_frames) {
  if (!(spec.rho > 0.0 && spec.rho <= 1.0))
    throw std::invalid_argument("toy spec: rho must be in (0,1]");
  int cursor = 0;
  for (const ToyWord& w : spec.words) {
    if (w.token.empty()) throw std::invalid_argument("toy spec: empty token");
    if (w.start_frame < cursor || w.end_frame <= w.start_frame || w.end_frame > n_frames)
      throw std::invalid_argument("toy spec: word spans must be ordered, disjoint and in range");
    cursor = w.end_frame;
  }
}

namespace {

bool frame_is_silent(const Audio& audio, const FrameGrid& grid, int frame) {
  const SampleSpan span = frame_span(grid, frame, audio.samples.size());
  for (size_t i = span.begin; i < span.end; ++i)
    if (audio.samples[i] != 0) return false;
  return true;
}

}  // namespace

Transcript toy_transcribe(const ToyAsrSpec& spec, const Audio& audio, const FrameGrid& grid) {
  validate(spec, grid.n_frames);
  std::string raw;
  for (const ToyWord& w : spec.words) {
    int audible = 0;
    for (int f = w.start_frame; f < w.end_frame; ++f)
      if (!frame_is_silent(audio, grid, f)) ++audible;
    const int span = w.end_frame - w.start_frame;
    if (static_cast<double>(audible) / span >= spec.rho) {
      if (!raw.empty()) raw.push_back(' ');
      raw += w.token;
    }
  }
  return make_transcript(std::move(raw));
}

Audio make_toy_audio(const ToyAsrSpec& spec, int n_frames, int frame_length, int sample_rate) {
  if (n_frames < 1 || frame_length < 1)
    throw std::invalid_argument("make_toy_audio: need at least one frame");
  validate(spec, n_frames);
  std::vector<int16_t> samples(static_cast<size_t>(n_frames) * frame_length, 0);
  for (const ToyWord& w : spec.words) {
    const size_t begin = static_cast<size_t>(w.start_frame) * frame_length;
    const size_t end = static_cast<size_t>(w.end_frame) * frame_length;
    std::fill(samples.begin() + static_cast<std::ptrdiff_t>(begin),
              samples.begin() + static_cast<std::ptrdiff_t>(end), int16_t{8192});
  }
  return make_audio(std::move(samples), sample_rate);
}

ToyTranscriber::ToyTranscriber(ToyAsrSpec spec, int frame_length, std::string id)
    : spec_(std::move(spec)), frame_length_(frame_length), id_(std::move(id)) {
  if (frame_length_ < 1) throw std::invalid_argument("toy transcriber: frame_length must be >= 1");
  if (id_.empty()) id_ = "toy:" + to_hex64(fnv1a64(to_json(spec_).dump()));
}

Transcript ToyTranscriber::transcribe(const Audio& audio) {
  return toy_transcribe(spec_, audio, frame_grid(audio, frame_length_));
}

MinimalExplanation brute_force_min_explanation(const ToyAsrSpec& spec, const Audio& audio,
                                               const FrameGrid& grid,
                                               const ClassifierConfig& classifier,
                                               SemanticProvider* provider) {
  const int n = grid.n_frames;
  if (n > 20) throw std::invalid_argument("brute_force_min_explanation: limited to 20 frames");
  const Transcript original = toy_transcribe(spec, audio, grid);
  if (original.empty())
    throw std::invalid_argument("brute_force_min_explanation: original transcript is empty");

  std::vector<int> subset;
  // Lexicographically ordered k-combinations of [0, n).
  const auto first_sufficient = [&](auto&& self, int k, int next) -> bool {
    if (static_cast<int>(subset.size()) == k) {
      const FrameMask complement = complement_mask(subset, grid);
      const Transcript t = toy_transcribe(spec, apply_mask(audio, grid, complement), grid);
      return classify(original, t, classifier, provider).label == Label::kCorrect;
    }
    for (int f = next; f <= n - (k - static_cast<int>(subset.size())); ++f) {
      subset.push_back(f);
      if (self(self, k, f + 1)) return true;
      subset.pop_back();
    }
    return false;
  };

  for (int k = 0; k <= n; ++k) {
    subset.clear();
    if (first_sufficient(first_sufficient, k, 0)) {
      MinimalExplanation result;
      result.size = k;
      result.frames = subset;
      return result;
    }
  }
  throw std::logic_error("brute_force_min_explanation: no sufficient subset found");
}

nlohmann::ordered_json to_json(const ToyAsrSpec& spec) {
  nlohmann::ordered_json j;
  j["rho"] = spec.rho;
  auto words = nlohmann::ordered_json::array();
  for (const ToyWord& w : spec.words) {
    nlohmann::ordered_json wj;
    wj["token"] = w.token;
    wj["start_frame"] = w.start_frame;
    wj["end_frame"] = w.end_frame;
    words.push_back(std::move(wj));
  }
  j["words"] = std::move(words);
  return j;
}

ToyAsrSpec toy_spec_from_json(const nlohmann::json& j) {
  ToyAsrSpec spec;
  spec.rho = j.at("rho").get<double>();
  for (const auto& wj : j.at("words")) {
    ToyWord w;
    w.token = wj.at("token").get<std::string>();
    w.start_frame = wj.at("start_frame").get<int>();
    w.end_frame = wj.at("end_frame").get<int>();
    spec.words.push_back(std::move(w));
  }
  return spec;
}

ToyAsrSpec load_toy_spec(const std::string& path) {
  return toy_spec_from_json(nlohmann::json::parse(read_file(path)));
}

void save_toy_spec(const std::string& path, const ToyAsrSpec& spec) {
  atomic_write_file(path, to_json(spec).dump(2) + "\n");
}

}  // namespace asrx
