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

#include "asrx/cache.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

#include "asrx/util.hpp"

namespace asrx {

namespace {

using json = nlohmann::json;

std::string flat_key(const CacheKey& key) {
  return key.transcriber_id + "\n" + key.audio_id + "\n" + key.mask_digest;
}

}  // namespace

std::string mask_digest(const FrameMask& mask) {
  Fnv1a64 h;
  for (int f : mask.frames) h.update_u64(static_cast<uint64_t>(f));
  return to_hex64(h.digest());
}

TranscriptionCache::TranscriptionCache(const std::string& path) {
  if (path.empty()) return;
  persistent_ = true;
  load(path);
  appender_.open(path, std::ios::app);
  if (!appender_) {
    degraded_ = true;
    last_error_ = "cache: cannot open for append: " + path;
  }
}

void TranscriptionCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // no file yet is normal
  std::string line;
  size_t bad = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json entry = json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || !entry.contains("transcriber") ||
        !entry.contains("audio") || !entry.contains("mask") || !entry.contains("transcript")) {
      ++bad;
      continue;
    }
    CacheKey key{entry["transcriber"].get<std::string>(), entry["audio"].get<std::string>(),
                 entry["mask"].get<std::string>()};
    entries_[flat_key(key)] = entry["transcript"].get<std::string>();
  }
  if (bad > 0) {
    degraded_ = true;
    last_error_ = "cache: skipped " + std::to_string(bad) + " malformed line(s) in " + path;
  }
}

std::optional<std::string> TranscriptionCache::lookup(const CacheKey& key) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(flat_key(key));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TranscriptionCache::store(const CacheKey& key, const std::string& raw_transcript) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_[flat_key(key)] = raw_transcript;
  if (!persistent_ || !appender_) return;
  json entry;
  entry["transcriber"] = key.transcriber_id;
  entry["audio"] = key.audio_id;
  entry["mask"] = key.mask_digest;
  entry["transcript"] = raw_transcript;
  entry["ts"] = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::system_clock::now().time_since_epoch())
                    .count();
  appender_ << entry.dump() << "\n";
  appender_.flush();
  if (!appender_) {
    degraded_ = true;
    last_error_ = "cache: append failed; continuing in memory";
  }
}

size_t TranscriptionCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

bool TranscriptionCache::degraded() const {
  std::lock_guard<std::mutex> lock(mu_);
  return degraded_;
}

std::string TranscriptionCache::last_error() const {
  std::lock_guard<std::mutex> lock(mu_);
  return last_error_;
}

}  // namespace asrx
