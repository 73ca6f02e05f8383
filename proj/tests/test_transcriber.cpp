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

#include <doctest.h>
#include <httplib.h>

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <thread>

#include "asrx/cache.hpp"
#include "asrx/service.hpp"
#include "asrx/toy_asr.hpp"
#include "asrx/transcriber.hpp"
#include "asrx/wav.hpp"
#include "support/test_support.hpp"

using namespace asrx;

namespace {

// Counts real invocations; wraps a toy transcriber.
class CountingToy final : public Transcriber {
 public:
  CountingToy(ToyAsrSpec spec, int frame_length)
      : toy_(std::move(spec), frame_length, "counting-toy") {}
  std::string id() const override { return toy_.id(); }
  Capabilities capabilities() const override { return toy_.capabilities(); }
  Transcript transcribe(const Audio& audio) override {
    ++calls;
    return toy_.transcribe(audio);
  }
  std::atomic<long> calls{0};

 private:
  ToyTranscriber toy_;
};

ToyAsrSpec two_word_spec() {
  ToyAsrSpec spec;
  spec.rho = 0.5;
  spec.words = {{"hello", 0, 2}, {"there", 2, 4}};
  return spec;
}

struct TestServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  explicit TestServer() {
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~TestServer() {
    server.stop();
    thread.join();
  }
  std::string endpoint(const std::string& path) const {
    return "http://127.0.0.1:" + std::to_string(port) + path;
  }
};

std::string temp_path(const std::string& name) {
  return std::string("/tmp/asrx_test_") + std::to_string(::getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("toy transcriber emits both words when nothing is masked") {
  const ToyAsrSpec spec = two_word_spec();
  const Audio audio = make_toy_audio(spec, 4, 8);
  ToyTranscriber toy(spec, 8);
  const Transcript t = toy.transcribe(audio);
  CHECK(t.tokens == std::vector<std::string>{"hello", "there"});
}

TEST_CASE("http adapter round-trips a transcript") {
  TestServer ts;
  std::string seen_content_type, seen_auth;
  std::string seen_body;
  ts.server.Post("/stt", [&](const httplib::Request& req, httplib::Response& res) {
    seen_content_type = req.get_header_value("Content-Type");
    seen_auth = req.get_header_value("Authorization");
    seen_body = req.body;
    res.set_content("{\"transcript\":\"hello\"}", "application/json");
  });

  HttpTranscriber::Options opt;
  opt.endpoint = ts.endpoint("/stt");
  opt.bearer_token = "sekrit";
  HttpTranscriber http(opt);
  const Audio audio = make_audio({100, -100, 50, 0}, 16000);
  const Transcript t = http.transcribe(audio);

  CHECK(t.tokens == std::vector<std::string>{"hello"});
  CHECK(seen_content_type == "audio/wav");
  CHECK(seen_auth == "Bearer sekrit");
  const std::vector<uint8_t> wav = write_wav(audio);
  CHECK(seen_body == std::string(wav.begin(), wav.end()));
}

TEST_CASE("http adapter surfaces error categories") {
  TestServer ts;
  ts.server.Post("/fail", [](const httplib::Request&, httplib::Response& res) {
    res.status = 500;
    res.set_content("boom", "text/plain");
  });
  ts.server.Post("/garbage", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("not json", "application/json");
  });
  ts.server.Post("/missing", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"text\":\"x\"}", "application/json");
  });

  const Audio audio = make_audio({1, 2, 3}, 16000);

  HttpTranscriber::Options opt;
  opt.endpoint = ts.endpoint("/fail");
  try {
    HttpTranscriber(opt).transcribe(audio);
    FAIL("expected TranscriberError");
  } catch (const TranscriberError& e) {
    CHECK(e.kind() == TranscriberError::Kind::kRemoteStatus);
    CHECK(e.status() == 500);
  }

  opt.endpoint = ts.endpoint("/garbage");
  try {
    HttpTranscriber(opt).transcribe(audio);
    FAIL("expected TranscriberError");
  } catch (const TranscriberError& e) {
    CHECK(e.kind() == TranscriberError::Kind::kBadResponse);
  }

  opt.endpoint = ts.endpoint("/missing");
  try {
    HttpTranscriber(opt).transcribe(audio);
    FAIL("expected TranscriberError");
  } catch (const TranscriberError& e) {
    CHECK(e.kind() == TranscriberError::Kind::kBadResponse);
  }

  // Nothing listens on the reserved discard port.
  opt.endpoint = "http://127.0.0.1:9/nope";
  opt.timeout_seconds = 1;
  opt.transport_retries = 1;
  try {
    HttpTranscriber(opt).transcribe(audio);
    FAIL("expected TranscriberError");
  } catch (const TranscriberError& e) {
    CHECK(e.kind() == TranscriberError::Kind::kTransport);
  }
}

TEST_CASE("cache key is canonical and scoped by transcriber id") {
  const ToyAsrSpec spec = two_word_spec();
  const Audio audio = make_toy_audio(spec, 4, 8);
  const FrameGrid grid = frame_grid(audio, 8);

  CHECK(mask_digest(make_mask({1, 2}, grid)) == mask_digest(make_mask({2, 1}, grid)));
  CHECK(mask_digest(make_mask({1}, grid)) != mask_digest(make_mask({2}, grid)));

  CountingToy toy(spec, 8);
  TranscriptionCache cache;
  const FrameMask mask = make_mask({1, 2}, grid);

  const Transcript first = cached_transcribe(toy, audio, grid, mask, cache);
  CHECK(toy.calls == 1);
  const Transcript second = cached_transcribe(toy, audio, grid, mask, cache);
  CHECK(toy.calls == 1);  // hit
  CHECK(first.tokens == second.tokens);

  // A different transcriber id misses even with the same mask.
  ToyTranscriber distinct(two_word_spec(), 8, "another-id");
  TranscriptionService svc(distinct, &cache);
  svc.masked(audio, grid, mask);
  CHECK(svc.real_calls() == 1);
}

TEST_CASE("cache persists, reloads, and tolerates malformed lines") {
  const std::string path = temp_path("cache.jsonl");
  std::remove(path.c_str());
  const ToyAsrSpec spec = two_word_spec();
  const Audio audio = make_toy_audio(spec, 4, 8);
  const FrameGrid grid = frame_grid(audio, 8);
  const FrameMask mask = make_mask({0}, grid);

  {
    CountingToy toy(spec, 8);
    TranscriptionCache cache(path);
    cached_transcribe(toy, audio, grid, mask, cache);
    CHECK(toy.calls == 1);
  }
  {
    // Corrupt the file with a bad line; the good entry must survive.
    std::ofstream out(path, std::ios::app);
    out << "{this is not json}\n";
  }
  {
    CountingToy toy(spec, 8);
    TranscriptionCache cache(path);
    CHECK(cache.degraded());
    CHECK(cache.size() == 1);
    cached_transcribe(toy, audio, grid, mask, cache);
    CHECK(toy.calls == 0);  // served from the reloaded cache
  }
  std::remove(path.c_str());
}

TEST_CASE("service enforces capabilities and counts real calls") {
  class TinyCap final : public Transcriber {
   public:
    std::string id() const override { return "tiny"; }
    Capabilities capabilities() const override { return {.max_samples = 8}; }
    Transcript transcribe(const Audio&) override { return make_transcript("ok"); }
  };
  TinyCap tiny;
  TranscriptionService svc(tiny);
  const Audio big = make_audio(std::vector<int16_t>(64, 1), 16000);
  CHECK_THROWS_AS(svc.original(big), TranscriberError);
  const Audio small = make_audio(std::vector<int16_t>(8, 1), 16000);
  CHECK(svc.original(small).tokens == std::vector<std::string>{"ok"});
  CHECK(svc.real_calls() == 1);
}

TEST_CASE("parallel batch equals sequential batch") {
  const ToyAsrSpec spec = two_word_spec();
  const Audio audio = make_toy_audio(spec, 4, 8);
  const FrameGrid grid = frame_grid(audio, 8);

  std::vector<FrameMask> masks;
  for (int f = 0; f < grid.n_frames; ++f)
    for (int g = f; g < grid.n_frames; ++g) masks.push_back(make_mask({f, g}, grid));

  CountingToy seq_toy(spec, 8);
  TranscriptionService seq(seq_toy, nullptr, 1);
  const auto expected = seq.masked_batch(audio, grid, masks);

  CountingToy par_toy(spec, 8);
  TranscriptionService par(par_toy, nullptr, 4);
  const auto actual = par.masked_batch(audio, grid, masks);

  REQUIRE(expected.size() == actual.size());
  for (size_t i = 0; i < expected.size(); ++i) CHECK(expected[i].tokens == actual[i].tokens);
  CHECK(par_toy.calls == static_cast<long>(masks.size()));
}
