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

#ifndef ASRX_WAV_HPP
#define ASRX_WAV_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asrx/audio.hpp"

namespace asrx {

class WavFormatError : public std::runtime_error {
 public:
  enum class Kind {
    kNotRiff,
    kUnsupportedFormatCode,
    kChannelCount,
    kBitDepth,
    kTruncatedChunk,
    kMissingChunk,
    kEmptyData,
  };

  WavFormatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses a RIFF/WAVE container. Accepts PCM (format code 1), 16-bit, mono
/// only; anything else raises a WavFormatError with the specific kind.
Audio read_wav(const std::vector<uint8_t>& bytes);

/// Canonical 44-byte header (fmt before data) followed by little-endian
/// samples. read_wav(write_wav(a)) == a bit-exactly.
std::vector<uint8_t> write_wav(const Audio& audio);

Audio read_wav_file(const std::string& path);
void write_wav_file(const std::string& path, const Audio& audio);

}  // namespace asrx

#endif  // ASRX_WAV_HPP
