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

#include "asrx/audio.hpp"

#include <algorithm>
#include <stdexcept>

#include "asrx/util.hpp"

namespace asrx {

std::string Audio::id_hex() const { return to_hex64(id); }

Audio make_audio(std::vector<int16_t> samples, int sample_rate) {
  if (samples.empty()) throw std::invalid_argument("audio: samples must be non-empty");
  if (sample_rate <= 0) throw std::invalid_argument("audio: sample_rate must be positive");
  Fnv1a64 h;
  h.update_u64(static_cast<uint64_t>(sample_rate));
  for (int16_t s : samples) {
    const auto u = static_cast<uint16_t>(s);
    const unsigned char le[2] = {static_cast<unsigned char>(u & 0xff),
                                 static_cast<unsigned char>((u >> 8) & 0xff)};
    h.update(le, 2);
  }
  Audio a;
  a.samples = std::move(samples);
  a.sample_rate = sample_rate;
  a.id = h.digest();
  return a;
}

FrameGrid frame_grid(const Audio& audio, int frame_length) {
  if (frame_length < 1) throw std::invalid_argument("frame_grid: frame_length must be >= 1");
  FrameGrid g;
  g.frame_length = frame_length;
  const size_t n = audio.samples.size();
  g.n_frames = static_cast<int>((n + static_cast<size_t>(frame_length) - 1) /
                                static_cast<size_t>(frame_length));
  return g;
}

SampleSpan frame_span(const FrameGrid& grid, int frame, size_t n_samples) {
  if (frame < 0 || frame >= grid.n_frames) throw std::invalid_argument("frame_span: frame out of range");
  SampleSpan s;
  s.begin = static_cast<size_t>(frame) * static_cast<size_t>(grid.frame_length);
  s.end = std::min(n_samples, s.begin + static_cast<size_t>(grid.frame_length));
  return s;
}

bool FrameMask::contains(int frame) const {
  return std::binary_search(frames.begin(), frames.end(), frame);
}

FrameMask make_mask(std::vector<int> frames, const FrameGrid& grid) {
  std::sort(frames.begin(), frames.end());
  frames.erase(std::unique(frames.begin(), frames.end()), frames.end());
  if (!frames.empty() && (frames.front() < 0 || frames.back() >= grid.n_frames))
    throw std::invalid_argument("make_mask: frame index out of range");
  FrameMask m;
  m.frames = std::move(frames);
  return m;
}

FrameMask complement_mask(const std::vector<int>& keep, const FrameGrid& grid) {
  std::vector<bool> kept(static_cast<size_t>(grid.n_frames), false);
  for (int f : keep) {
    if (f < 0 || f >= grid.n_frames) throw std::invalid_argument("complement_mask: frame out of range");
    kept[static_cast<size_t>(f)] = true;
  }
  FrameMask m;
  for (int f = 0; f < grid.n_frames; ++f)
    if (!kept[static_cast<size_t>(f)]) m.frames.push_back(f);
  return m;
}

Audio apply_mask(const Audio& audio, const FrameGrid& grid, const FrameMask& mask) {
  const size_t n = audio.samples.size();
  const size_t expect = (n + static_cast<size_t>(grid.frame_length) - 1) /
                        static_cast<size_t>(grid.frame_length);
  if (static_cast<size_t>(grid.n_frames) != expect)
    throw std::invalid_argument("apply_mask: grid does not match audio");
  if (!mask.frames.empty() && (mask.frames.front() < 0 || mask.frames.back() >= grid.n_frames))
    throw std::invalid_argument("apply_mask: mask index out of range");
  std::vector<int16_t> out = audio.samples;
  for (int f : mask.frames) {
    const SampleSpan span = frame_span(grid, f, n);
    std::fill(out.begin() + static_cast<std::ptrdiff_t>(span.begin),
              out.begin() + static_cast<std::ptrdiff_t>(span.end), int16_t{0});
  }
  return make_audio(std::move(out), audio.sample_rate);
}

}  // namespace asrx
