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

#include "asrx/service.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace asrx {

Transcript cached_transcribe(Transcriber& t, const Audio& audio, const FrameGrid& grid,
                             const FrameMask& mask, TranscriptionCache& cache) {
  const CacheKey key{t.id(), audio.id_hex(), mask_digest(mask)};
  if (auto hit = cache.lookup(key)) return make_transcript(*hit);
  const Transcript result = t.transcribe(apply_mask(audio, grid, mask));
  cache.store(key, result.raw);
  return result;
}

TranscriptionService::TranscriptionService(Transcriber& transcriber, TranscriptionCache* cache,
                                           int max_in_flight)
    : transcriber_(transcriber), cache_(cache), max_in_flight_(max_in_flight < 1 ? 1 : max_in_flight) {}

void TranscriptionService::check_capabilities(const Audio& audio) const {
  if (audio.samples.size() > transcriber_.capabilities().max_samples)
    throw TranscriberError(TranscriberError::Kind::kCapability,
                           "transcriber " + transcriber_.id() + ": audio exceeds max length");
}

Transcript TranscriptionService::transcribe_uncached(const Audio& audio, const FrameGrid& grid,
                                                     const FrameMask& mask) {
  ++real_calls_;
  return transcriber_.transcribe(apply_mask(audio, grid, mask));
}

Transcript TranscriptionService::masked(const Audio& audio, const FrameGrid& grid,
                                        const FrameMask& mask) {
  check_capabilities(audio);
  if (cache_ == nullptr) return transcribe_uncached(audio, grid, mask);
  const CacheKey key{transcriber_.id(), audio.id_hex(), mask_digest(mask)};
  if (auto hit = cache_->lookup(key)) return make_transcript(*hit);
  const Transcript result = transcribe_uncached(audio, grid, mask);
  cache_->store(key, result.raw);
  return result;
}

Transcript TranscriptionService::original(const Audio& audio) {
  const FrameGrid grid{static_cast<int>(audio.samples.size()), 1};
  return masked(audio, grid, FrameMask{});
}

std::vector<Transcript> TranscriptionService::masked_batch(const Audio& audio,
                                                           const FrameGrid& grid,
                                                           std::span<const FrameMask> masks) {
  std::vector<Transcript> out(masks.size());
  const bool parallel =
      transcriber_.capabilities().concurrency_safe && max_in_flight_ > 1 && masks.size() > 1;
  if (!parallel) {
    for (size_t i = 0; i < masks.size(); ++i) out[i] = masked(audio, grid, masks[i]);
    return out;
  }

  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mu;
  const size_t workers = std::min<size_t>(static_cast<size_t>(max_in_flight_), masks.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= masks.size() || failed.load()) return;
        try {
          out[i] = masked(audio, grid, masks[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace asrx
