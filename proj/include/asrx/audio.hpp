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

#ifndef ASRX_AUDIO_HPP
#define ASRX_AUDIO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace asrx {

/// Mono 16-bit PCM audio. Immutable after construction; `id` is a stable
/// content hash of (sample_rate, samples) used as a cache key component.
struct Audio {
  std::vector<int16_t> samples;
  int sample_rate = 0;
  uint64_t id = 0;

  std::string id_hex() const;
};

/// Validates and hashes. Rejects empty sample vectors and non-positive rates.
Audio make_audio(std::vector<int16_t> samples, int sample_rate);

/// Non-overlapping tiling of the sample sequence into fixed-length frames.
/// The last frame may be short; it still counts as a full frame.
struct FrameGrid {
  int frame_length = 0;
  int n_frames = 0;
};

FrameGrid frame_grid(const Audio& audio, int frame_length);

/// Sample index range [begin, end) covered by frame `frame`.
struct SampleSpan {
  size_t begin = 0;
  size_t end = 0;
};
SampleSpan frame_span(const FrameGrid& grid, int frame, size_t n_samples);

/// A set of frame indices to silence. Always sorted and duplicate-free;
/// the empty mask denotes the original audio.
struct FrameMask {
  std::vector<int> frames;

  bool empty() const { return frames.empty(); }
  size_t size() const { return frames.size(); }
  bool contains(int frame) const;
};

/// Canonicalizes (sorts, dedupes) and validates indices against the grid.
FrameMask make_mask(std::vector<int> frames, const FrameGrid& grid);

/// All frames of the grid that are NOT in `keep`.
FrameMask complement_mask(const std::vector<int>& keep, const FrameGrid& grid);

/// Copy of `audio` with every sample inside masked frames set to zero.
Audio apply_mask(const Audio& audio, const FrameGrid& grid, const FrameMask& mask);

}  // namespace asrx

#endif  // ASRX_AUDIO_HPP
