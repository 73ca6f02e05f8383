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

#ifndef ASRX_CACHE_HPP
#define ASRX_CACHE_HPP

#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "asrx/audio.hpp"

namespace asrx {

/// Canonical digest of a mask: hash of the sorted frame indices, so {1,2}
/// and {2,1} key identically.
std::string mask_digest(const FrameMask& mask);

struct CacheKey {
  std::string transcriber_id;
  std::string audio_id;
  std::string mask_digest;
};

/// Persistent transcription cache. Append-only JSON-lines file, one entry
/// per line, loaded fully at open; duplicate keys resolve last-write-wins.
/// I/O problems are never fatal: the cache degrades to in-memory operation
/// and reports the condition through degraded()/last_error().
class TranscriptionCache {
 public:
  /// Empty path = in-memory only (still deduplicates within the process).
  explicit TranscriptionCache(const std::string& path = "");

  std::optional<std::string> lookup(const CacheKey& key);
  void store(const CacheKey& key, const std::string& raw_transcript);

  size_t size() const;
  bool degraded() const;
  std::string last_error() const;

 private:
  void load(const std::string& path);

  mutable std::mutex mu_;
  std::unordered_map<std::string, std::string> entries_;
  std::ofstream appender_;
  bool persistent_ = false;
  bool degraded_ = false;
  std::string last_error_;
};

}  // namespace asrx

#endif  // ASRX_CACHE_HPP
