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

#include "asrx/wav.hpp"

#include <cstring>

#include "asrx/util.hpp"

namespace asrx {

namespace {

uint32_t read_u32(const std::vector<uint8_t>& b, size_t off) {
  return static_cast<uint32_t>(b[off]) | (static_cast<uint32_t>(b[off + 1]) << 8) |
         (static_cast<uint32_t>(b[off + 2]) << 16) | (static_cast<uint32_t>(b[off + 3]) << 24);
}

uint16_t read_u16(const std::vector<uint8_t>& b, size_t off) {
  return static_cast<uint16_t>(static_cast<uint16_t>(b[off]) |
                               (static_cast<uint16_t>(b[off + 1]) << 8));
}

void put_u32(std::vector<uint8_t>& b, uint32_t v) {
  b.push_back(static_cast<uint8_t>(v & 0xff));
  b.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
  b.push_back(static_cast<uint8_t>((v >> 16) & 0xff));
  b.push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

void put_u16(std::vector<uint8_t>& b, uint16_t v) {
  b.push_back(static_cast<uint8_t>(v & 0xff));
  b.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
}

void put_tag(std::vector<uint8_t>& b, const char* tag) {
  b.insert(b.end(), tag, tag + 4);
}

bool tag_is(const std::vector<uint8_t>& b, size_t off, const char* tag) {
  return std::memcmp(b.data() + off, tag, 4) == 0;
}

}  // namespace

Audio read_wav(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE"))
    throw WavFormatError(WavFormatError::Kind::kNotRiff, "wav: not a RIFF/WAVE container");

  bool have_fmt = false;
  uint16_t channels = 0, bits = 0, format_code = 0;
  uint32_t rate = 0;

  size_t off = 12;
  while (off < bytes.size()) {
    if (off + 8 > bytes.size())
      throw WavFormatError(WavFormatError::Kind::kTruncatedChunk, "wav: truncated chunk header");
    const uint32_t chunk_size = read_u32(bytes, off + 4);
    const size_t body = off + 8;
    if (body + chunk_size > bytes.size())
      throw WavFormatError(WavFormatError::Kind::kTruncatedChunk,
                           "wav: chunk declares more bytes than present");

    if (tag_is(bytes, off, "fmt ")) {
      if (chunk_size < 16)
        throw WavFormatError(WavFormatError::Kind::kTruncatedChunk, "wav: fmt chunk too small");
      format_code = read_u16(bytes, body);
      channels = read_u16(bytes, body + 2);
      rate = read_u32(bytes, body + 4);
      bits = read_u16(bytes, body + 14);
      have_fmt = true;
    } else if (tag_is(bytes, off, "data")) {
      if (!have_fmt)
        throw WavFormatError(WavFormatError::Kind::kMissingChunk, "wav: data chunk before fmt");
      if (format_code != 1)
        throw WavFormatError(WavFormatError::Kind::kUnsupportedFormatCode,
                             "wav: unsupported format code " + std::to_string(format_code));
      if (channels != 1)
        throw WavFormatError(WavFormatError::Kind::kChannelCount,
                             "wav: expected mono, got " + std::to_string(channels) + " channels");
      if (bits != 16)
        throw WavFormatError(WavFormatError::Kind::kBitDepth,
                             "wav: expected 16-bit samples, got " + std::to_string(bits));
      if (chunk_size == 0)
        throw WavFormatError(WavFormatError::Kind::kEmptyData, "wav: empty data chunk");
      if (chunk_size % 2 != 0)
        throw WavFormatError(WavFormatError::Kind::kTruncatedChunk,
                             "wav: odd data size for 16-bit samples");
      std::vector<int16_t> samples(chunk_size / 2);
      for (size_t i = 0; i < samples.size(); ++i)
        samples[i] = static_cast<int16_t>(read_u16(bytes, body + 2 * i));
      return make_audio(std::move(samples), static_cast<int>(rate));
    }
    // Skip unknown chunks; RIFF pads odd-sized bodies to even offsets.
    off = body + chunk_size + (chunk_size % 2);
  }
  throw WavFormatError(WavFormatError::Kind::kMissingChunk, "wav: no data chunk");
}

std::vector<uint8_t> write_wav(const Audio& audio) {
  const uint32_t data_size = static_cast<uint32_t>(audio.samples.size() * 2);
  std::vector<uint8_t> out;
  out.reserve(44 + data_size);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_size);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<uint32_t>(audio.sample_rate));
  put_u32(out, static_cast<uint32_t>(audio.sample_rate) * 2);  // byte rate
  put_u16(out, 2);                                             // block align
  put_u16(out, 16);                                            // bits
  put_tag(out, "data");
  put_u32(out, data_size);
  for (int16_t s : audio.samples) put_u16(out, static_cast<uint16_t>(s));
  return out;
}

Audio read_wav_file(const std::string& path) {
  const std::string raw = read_file(path);
  return read_wav(std::vector<uint8_t>(raw.begin(), raw.end()));
}

void write_wav_file(const std::string& path, const Audio& audio) {
  const std::vector<uint8_t> bytes = write_wav(audio);
  atomic_write_file(path, std::string(bytes.begin(), bytes.end()));
}

}  // namespace asrx
