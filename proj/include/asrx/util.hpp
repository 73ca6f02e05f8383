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

#ifndef ASRX_UTIL_HPP
#define ASRX_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace asrx {

// 64-bit FNV-1a. Used for audio ids, mask digests and seed derivation;
// stable across platforms, not cryptographic.
class Fnv1a64 {
 public:
  Fnv1a64& update(const void* data, size_t len);
  Fnv1a64& update_u64(uint64_t v);  // little-endian
  Fnv1a64& update_i64(int64_t v) { return update_u64(static_cast<uint64_t>(v)); }
  uint64_t digest() const { return state_; }

 private:
  uint64_t state_ = 0xcbf29ce484222325ull;
};

uint64_t fnv1a64(const void* data, size_t len);
uint64_t fnv1a64(const std::string& s);

std::string to_hex64(uint64_t v);

// Whole-file helpers. Writes go through a temp file in the same directory
// followed by a rename, so readers never observe a partial file.
std::string read_file(const std::string& path);
void atomic_write_file(const std::string& path, const std::string& contents);

}  // namespace asrx

#endif  // ASRX_UTIL_HPP
