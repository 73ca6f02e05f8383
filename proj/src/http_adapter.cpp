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

#include "asrx/transcriber.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "asrx/wav.hpp"

namespace asrx {

namespace {

using json = nlohmann::json;

// Splits "http://host:port/path" into client base and request path.
void split_endpoint(const std::string& endpoint, std::string* host, std::string* path) {
  const size_t scheme = endpoint.find("://");
  if (scheme == std::string::npos)
    throw std::invalid_argument("endpoint must include a scheme: " + endpoint);
  const size_t slash = endpoint.find('/', scheme + 3);
  if (slash == std::string::npos) {
    *host = endpoint;
    *path = "/";
  } else {
    *host = endpoint.substr(0, slash);
    *path = endpoint.substr(slash);
  }
}

httplib::Headers auth_headers(const std::string& token) {
  httplib::Headers headers;
  if (!token.empty()) headers.emplace("Authorization", "Bearer " + token);
  return headers;
}

// POST with retries on transport failures only; remote statuses surface.
httplib::Result post_with_retries(const std::string& host, const std::string& path,
                                  const httplib::Headers& headers, const std::string& body,
                                  const std::string& content_type, int timeout_seconds,
                                  int retries) {
  for (int attempt = 0;; ++attempt) {
    httplib::Client client(host);
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    client.set_write_timeout(timeout_seconds, 0);
    auto res = client.Post(path, headers, body, content_type);
    if (res || attempt >= retries) return res;
  }
}

}  // namespace

HttpTranscriber::HttpTranscriber(Options options) : options_(std::move(options)) {
  split_endpoint(options_.endpoint, &host_, &path_);
}

std::string HttpTranscriber::id() const { return "http:" + options_.endpoint; }

Capabilities HttpTranscriber::capabilities() const {
  Capabilities caps;
  caps.max_samples = options_.max_samples;
  caps.concurrency_safe = options_.concurrency_safe;
  return caps;
}

Transcript HttpTranscriber::transcribe(const Audio& audio) {
  const std::vector<uint8_t> wav = write_wav(audio);
  auto res = post_with_retries(host_, path_, auth_headers(options_.bearer_token),
                               std::string(wav.begin(), wav.end()), "audio/wav",
                               options_.timeout_seconds, options_.transport_retries);
  if (!res)
    throw TranscriberError(TranscriberError::Kind::kTransport,
                           "transcriber " + id() + ": transport failure (" +
                               httplib::to_string(res.error()) + ")");
  if (res->status != 200)
    throw TranscriberError(TranscriberError::Kind::kRemoteStatus,
                           "transcriber " + id() + ": remote status " +
                               std::to_string(res->status),
                           res->status);
  json parsed = json::parse(res->body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("transcript") ||
      !parsed["transcript"].is_string())
    throw TranscriberError(TranscriberError::Kind::kBadResponse,
                           "transcriber " + id() + ": response lacks string field 'transcript'");
  return make_transcript(parsed["transcript"].get<std::string>());
}

RemoteEmbeddingProvider::RemoteEmbeddingProvider(Options options) : options_(std::move(options)) {
  split_endpoint(options_.endpoint, &host_, &path_);
}

std::string RemoteEmbeddingProvider::name() const { return "remote-embedding:" + options_.endpoint; }

std::vector<double> RemoteEmbeddingProvider::embed(const std::string& text) {
  json request;
  request["text"] = text;
  auto res = post_with_retries(host_, path_, auth_headers(options_.bearer_token), request.dump(),
                               "application/json", options_.timeout_seconds, 2);
  if (!res) throw ProviderError(name(), "transport failure");
  if (res->status != 200) throw ProviderError(name(), "remote status " + std::to_string(res->status));
  json parsed = json::parse(res->body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("embedding") ||
      !parsed["embedding"].is_array())
    throw ProviderError(name(), "response lacks array field 'embedding'");
  std::vector<double> v;
  for (const auto& x : parsed["embedding"]) {
    if (!x.is_number()) throw ProviderError(name(), "non-numeric embedding entry");
    v.push_back(x.get<double>());
  }
  return v;
}

}  // namespace asrx
