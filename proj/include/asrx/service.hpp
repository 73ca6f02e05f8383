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

#ifndef ASRX_SERVICE_HPP
#define ASRX_SERVICE_HPP

#include <atomic>
#include <span>
#include <vector>

#include "asrx/audio.hpp"
#include "asrx/cache.hpp"
#include "asrx/transcriber.hpp"

namespace asrx {

/// One cached transcription: on a hit returns the stored transcript without
/// touching the transcriber; on a miss masks the audio, transcribes and
/// stores. Callers always pass the ORIGINAL audio plus a mask — never
/// pre-masked audio — so the (transcriber, audio, mask) key is canonical.
Transcript cached_transcribe(Transcriber& t, const Audio& audio, const FrameGrid& grid,
                             const FrameMask& mask, TranscriptionCache& cache);

/// Funnel for all transcriber traffic: caching, capability checks, an exact
/// counter of real (non-cached) invocations, and bounded-concurrency batch
/// transcription for adapters that declare themselves concurrency-safe.
class TranscriptionService {
 public:
  TranscriptionService(Transcriber& transcriber, TranscriptionCache* cache = nullptr,
                       int max_in_flight = 4);

  Transcript original(const Audio& audio);
  Transcript masked(const Audio& audio, const FrameGrid& grid, const FrameMask& mask);

  /// Transcribes every mask; results are merged by index so the output is
  /// independent of completion order.
  std::vector<Transcript> masked_batch(const Audio& audio, const FrameGrid& grid,
                                       std::span<const FrameMask> masks);

  long real_calls() const { return real_calls_.load(); }
  Transcriber& transcriber() { return transcriber_; }

 private:
  void check_capabilities(const Audio& audio) const;
  Transcript transcribe_uncached(const Audio& audio, const FrameGrid& grid, const FrameMask& mask);

  Transcriber& transcriber_;
  TranscriptionCache* cache_;
  int max_in_flight_;
  std::atomic<long> real_calls_{0};
};

}  // namespace asrx

#endif  // ASRX_SERVICE_HPP
