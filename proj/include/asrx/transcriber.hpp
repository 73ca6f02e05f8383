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

#ifndef ASRX_TRANSCRIBER_HPP
#define ASRX_TRANSCRIBER_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "asrx/audio.hpp"
#include "asrx/similarity.hpp"
#include "asrx/transcript.hpp"

namespace asrx {

struct Capabilities {
  size_t max_samples = std::numeric_limits<size_t>::max();
  bool concurrency_safe = false;
};

class TranscriberError : public std::runtime_error {
 public:
  enum class Kind { kTransport, kRemoteStatus, kBadResponse, kCapability };

  TranscriberError(Kind kind, const std::string& what, int status = 0)
      : std::runtime_error(what), kind_(kind), status_(status) {}
  Kind kind() const { return kind_; }
  int status() const { return status_; }

 private:
  Kind kind_;
  int status_;
};

/// A speech-to-text system treated as a black box. `id()` must be stable:
/// it keys the transcription cache together with the audio content hash.
class Transcriber {
 public:
  virtual ~Transcriber() = default;
  virtual std::string id() const = 0;
  virtual Capabilities capabilities() const = 0;
  virtual Transcript transcribe(const Audio& audio) = 0;
};

/// Generic HTTP adapter: POSTs the WAV bytes (Content-Type audio/wav) to an
/// endpoint and expects a JSON object with a string field "transcript".
/// Retries happen only on transport failures, never on remote errors, so no
/// retry-induced nondeterminism reaches callers.
class HttpTranscriber final : public Transcriber {
 public:
  struct Options {
    std::string endpoint;      // e.g. http://host:port/transcribe
    std::string bearer_token;  // empty = no Authorization header
    int timeout_seconds = 30;
    int transport_retries = 2;
    bool concurrency_safe = true;
    size_t max_samples = std::numeric_limits<size_t>::max();
  };

  explicit HttpTranscriber(Options options);
  std::string id() const override;
  Capabilities capabilities() const override;
  Transcript transcribe(const Audio& audio) override;

 private:
  Options options_;
  std::string host_;  // scheme://host[:port]
  std::string path_;
};

/// Embedding client with the same wire conventions as HttpTranscriber:
/// POST {"text": ...} to the endpoint, response {"embedding": [...]}.
class RemoteEmbeddingProvider final : public SemanticProvider {
 public:
  struct Options {
    std::string endpoint;
    std::string bearer_token;
    int timeout_seconds = 30;
  };

  explicit RemoteEmbeddingProvider(Options options);
  std::string name() const override;
  bool thread_safe() const override { return true; }
  std::vector<double> embed(const std::string& text) override;

 private:
  Options options_;
  std::string host_;
  std::string path_;
};

}  // namespace asrx

#endif  // ASRX_TRANSCRIBER_HPP
