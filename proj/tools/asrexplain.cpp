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
//
// Command-line driver: single explanations (`explain`), batch evaluation
// with size/consistency reporting (`evaluate`) and synthetic audio
// generation for toy transcriber specs (`synth`).
//
// Exit codes: 0 success, 1 usage/input error, 2 transcriber error,
// 3 I/O error, 4 (evaluate only) at least one item failed.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "asrx/engine.hpp"
#include "asrx/toy_asr.hpp"
#include "asrx/util.hpp"
#include "asrx/wav.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kTokenEnvVar = "ASRX_HTTP_TOKEN";

struct CommonFlags {
  std::string metric = "wer";
  double threshold = std::nan("");  // unset -> metric default (wer 0, semantic 0.5)
  int mutants = 100;
  double alpha = 0.05;
  double mu = 0.01;
  uint64_t seed = 0;
  int frame_length = 512;
  int runs = 3;
  int superframes = 4;
  int depth_limit = 6;
  bool no_witness_check = false;
  double sigma = 0.25;
  double lambda = 1e-3;
  std::string cache_path;
  int jobs = 4;
  int timeout = 30;
  int retries = 2;
  std::string embed_endpoint;
};

void add_common_flags(CLI::App* cmd, CommonFlags* f) {
  cmd->set_config("--config", "", "Read options from a key=value file");
  cmd->add_option("--metric", f->metric, "Similarity metric: wer or semantic")
      ->check(CLI::IsMember({"wer", "semantic"}))
      ->capture_default_str();
  cmd->add_option("--threshold", f->threshold,
                  "Classification threshold T (default: 0 for wer, 0.5 for semantic)");
  cmd->add_option("--mutants", f->mutants, "Mutant set size")->capture_default_str();
  cmd->add_option("--alpha", f->alpha, "Initial masking fraction")->capture_default_str();
  cmd->add_option("--mu", f->mu, "Masking schedule step")->capture_default_str();
  cmd->add_option("--seed", f->seed, "RNG seed")->capture_default_str();
  cmd->add_option("--frame-length", f->frame_length, "Samples per frame")->capture_default_str();
  cmd->add_option("--runs", f->runs, "Causal: independent partitioning runs")
      ->capture_default_str();
  cmd->add_option("--superframes", f->superframes, "Causal: initial superframe count")
      ->capture_default_str();
  cmd->add_option("--depth-limit", f->depth_limit, "Causal: refinement depth limit")
      ->capture_default_str();
  cmd->add_flag("--no-witness-check", f->no_witness_check,
                "Causal: accept any Correct mutant as responsibility evidence without "
                "verifying that additionally masking the superframe flips the label");
  cmd->add_option("--sigma", f->sigma, "LIME: kernel width")->capture_default_str();
  cmd->add_option("--lambda", f->lambda, "LIME: ridge strength")->capture_default_str();
  cmd->add_option("--cache", f->cache_path, "Transcription cache file (JSON lines)");
  cmd->add_option("--jobs", f->jobs, "Max concurrent transcription requests")
      ->capture_default_str();
  cmd->add_option("--timeout", f->timeout, "HTTP timeout, seconds")->capture_default_str();
  cmd->add_option("--retries", f->retries, "HTTP retries on transport errors")
      ->capture_default_str();
  cmd->add_option("--embed-endpoint", f->embed_endpoint,
                  "Remote embedding service for the semantic metric "
                  "(default: built-in term-frequency provider)");
}

std::string bearer_token() {
  const char* tok = std::getenv(kTokenEnvVar);
  return tok == nullptr ? std::string() : std::string(tok);
}

asrx::EngineConfig engine_config(const CommonFlags& f, const std::string& method) {
  asrx::EngineConfig cfg;
  cfg.method = asrx::method_from_name(method);
  cfg.classifier.metric = asrx::metric_from_name(f.metric);
  cfg.classifier.threshold =
      std::isnan(f.threshold) ? (cfg.classifier.metric == asrx::Metric::kWer ? 0.0 : 0.5)
                              : f.threshold;
  asrx::validate(cfg.classifier);
  cfg.mutation.alpha0 = f.alpha;
  cfg.mutation.mu = f.mu;
  cfg.mutation.set_size = f.mutants;
  cfg.causal.runs = f.runs;
  cfg.causal.initial_superframes = f.superframes;
  cfg.causal.depth_limit = f.depth_limit;
  cfg.causal.budget = f.mutants;
  cfg.causal.witness_check = !f.no_witness_check;
  cfg.lime.kernel_width = f.sigma;
  cfg.lime.ridge_lambda = f.lambda;
  cfg.frame_length = f.frame_length;
  cfg.max_in_flight = f.jobs;
  cfg.seed = f.seed;
  return cfg;
}

std::unique_ptr<asrx::Transcriber> make_transcriber(const std::string& toy_spec_path,
                                                    const std::string& endpoint,
                                                    const CommonFlags& f,
                                                    const std::string& id = "") {
  if (!toy_spec_path.empty())
    return std::make_unique<asrx::ToyTranscriber>(asrx::load_toy_spec(toy_spec_path),
                                                  f.frame_length, id);
  asrx::HttpTranscriber::Options opt;
  opt.endpoint = endpoint;
  opt.bearer_token = bearer_token();
  opt.timeout_seconds = f.timeout;
  opt.transport_retries = f.retries;
  return std::make_unique<asrx::HttpTranscriber>(opt);
}

std::unique_ptr<asrx::SemanticProvider> make_provider(const CommonFlags& f) {
  if (f.embed_endpoint.empty()) return std::make_unique<asrx::TermFrequencyProvider>();
  asrx::RemoteEmbeddingProvider::Options opt;
  opt.endpoint = f.embed_endpoint;
  opt.bearer_token = bearer_token();
  opt.timeout_seconds = f.timeout;
  return std::make_unique<asrx::RemoteEmbeddingProvider>(opt);
}

void write_output(const std::string& path, const std::string& contents) {
  if (path == "-") {
    std::cout << contents;
    return;
  }
  asrx::atomic_write_file(path, contents);
}

std::string plot_csv(const asrx::Audio& audio, const asrx::FrameGrid& grid,
                     const asrx::Explanation& e) {
  std::vector<bool> in_explanation(audio.samples.size(), false);
  for (int f : e.frames) {
    const asrx::SampleSpan span = asrx::frame_span(grid, f, audio.samples.size());
    for (size_t i = span.begin; i < span.end; ++i) in_explanation[i] = true;
  }
  std::ostringstream out;
  out << "sample,amplitude,in_explanation\n";
  for (size_t i = 0; i < audio.samples.size(); ++i)
    out << i << "," << audio.samples[i] << "," << (in_explanation[i] ? 1 : 0) << "\n";
  return out.str();
}

int run_explain(const CommonFlags& f, const std::string& audio_path, const std::string& method,
                const std::string& toy_spec_path, const std::string& endpoint,
                const std::string& out_path, const std::string& mask_wav_path,
                const std::string& plot_csv_path) {
  if (toy_spec_path.empty() == endpoint.empty()) {
    std::cerr << "explain: exactly one of --toy-spec or --endpoint is required\n";
    return 1;
  }
  const asrx::Audio audio = asrx::read_wav_file(audio_path);
  const asrx::EngineConfig cfg = engine_config(f, method);
  auto transcriber = make_transcriber(toy_spec_path, endpoint, f);
  auto provider = make_provider(f);
  asrx::TranscriptionCache cache(f.cache_path);

  const asrx::ExplainOutcome outcome =
      asrx::explain_audio(audio, *transcriber, &cache, provider.get(), cfg);
  if (cache.degraded()) std::cerr << "warning: " << cache.last_error() << "\n";

  write_output(out_path, asrx::to_json(outcome.explanation).dump(2) + "\n");

  const asrx::FrameGrid grid = asrx::frame_grid(audio, cfg.frame_length);
  if (!mask_wav_path.empty()) {
    const asrx::FrameMask complement =
        asrx::complement_mask(outcome.explanation.frames, grid);
    asrx::write_wav_file(mask_wav_path, asrx::apply_mask(audio, grid, complement));
  }
  if (!plot_csv_path.empty())
    asrx::atomic_write_file(plot_csv_path, plot_csv(audio, grid, outcome.explanation));
  return 0;
}

struct ManifestTranscriber {
  std::string id;
  std::string toy_spec;
  std::string endpoint;
};

struct Manifest {
  std::vector<std::string> audios;
  std::vector<ManifestTranscriber> transcribers;
  std::string reference;
};

Manifest load_manifest(const std::string& path) {
  const json j = json::parse(asrx::read_file(path));
  Manifest m;
  for (const auto& a : j.value("audios", json::array())) m.audios.push_back(a.get<std::string>());
  for (const auto& t : j.value("transcribers", json::array())) {
    ManifestTranscriber mt;
    mt.id = t.at("id").get<std::string>();
    mt.toy_spec = t.value("toy_spec", "");
    mt.endpoint = t.value("endpoint", "");
    m.transcribers.push_back(std::move(mt));
  }
  m.reference = j.value("reference", "");
  return m;
}

struct ItemResult {
  ordered_json per_method = ordered_json::object();
  std::vector<std::string> errors;
  std::string audio_id;
};

int run_evaluate(const CommonFlags& f, const std::string& manifest_path,
                 const std::vector<std::string>& methods, const std::string& reference_flag,
                 const std::string& out_path) {
  const Manifest manifest = load_manifest(manifest_path);
  if (manifest.audios.empty() || manifest.transcribers.empty()) {
    std::cerr << "evaluate: manifest needs at least one audio and one transcriber\n";
    return 1;
  }
  std::string reference = reference_flag.empty() ? manifest.reference : reference_flag;
  if (reference.empty()) reference = manifest.transcribers.front().id;
  bool reference_found = false;
  for (const auto& t : manifest.transcribers) reference_found |= (t.id == reference);
  if (!reference_found) {
    std::cerr << "evaluate: reference transcriber '" << reference << "' not in manifest\n";
    return 1;
  }
  for (const auto& m : methods) asrx::method_from_name(m);  // validate early

  asrx::TranscriptionCache cache(f.cache_path);
  std::vector<ItemResult> items(manifest.audios.size());

  // Items run concurrently up to --jobs; per-item transcriptions stay
  // sequential so thread counts remain bounded.
  std::atomic<size_t> next{0};
  const size_t workers =
      std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(f.jobs), manifest.audios.size()));
  auto worker = [&] {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= manifest.audios.size()) return;
      ItemResult& item = items[idx];
      try {
        const asrx::Audio audio = asrx::read_wav_file(manifest.audios[idx]);
        item.audio_id = audio.id_hex();
        // One explanation per (method, transcriber).
        std::map<std::string, std::map<std::string, asrx::Explanation>> explanations;
        for (const auto& method : methods) {
          for (const auto& mt : manifest.transcribers) {
            CommonFlags serial = f;
            serial.jobs = 1;
            asrx::EngineConfig cfg = engine_config(serial, method);
            auto transcriber = make_transcriber(mt.toy_spec, mt.endpoint, serial, mt.id);
            auto provider = make_provider(serial);
            explanations[method][mt.id] =
                asrx::explain_audio(audio, *transcriber, &cache, provider.get(), cfg).explanation;
          }
        }
        for (const auto& method : methods) {
          ordered_json per_transcriber = ordered_json::object();
          for (const auto& mt : manifest.transcribers) {
            const asrx::Explanation& e = explanations[method][mt.id];
            ordered_json cell;
            cell["size_ratio"] = e.size_ratio;
            cell["n_frames"] = e.n_frames;
            cell["explanation_frames"] = e.frames;
            cell["consistency_vs_reference"] =
                asrx::consistency(explanations[method][reference], e);
            per_transcriber[mt.id] = std::move(cell);
          }
          item.per_method[method] = std::move(per_transcriber);
        }
      } catch (const std::exception& ex) {
        item.errors.emplace_back(ex.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Aggregate sequentially in manifest order so reports are byte-stable.
  ordered_json report;
  report["manifest"] = manifest_path;
  report["metric"] = f.metric;
  report["threshold"] =
      std::isnan(f.threshold) ? (f.metric == "wer" ? 0.0 : 0.5) : f.threshold;
  report["seed"] = f.seed;
  report["reference"] = reference;
  report["methods"] = methods;

  size_t failed = 0;
  ordered_json items_json = ordered_json::array();
  std::map<std::string, std::map<std::string, std::pair<double, size_t>>> size_acc;
  std::map<std::string, std::map<std::string, std::pair<double, size_t>>> cons_acc;
  for (size_t i = 0; i < items.size(); ++i) {
    const ItemResult& item = items[i];
    ordered_json ij;
    ij["audio"] = manifest.audios[i];
    ij["audio_id"] = item.audio_id;
    ij["results"] = item.per_method;
    ij["errors"] = item.errors;
    items_json.push_back(std::move(ij));
    if (!item.errors.empty()) {
      ++failed;
      continue;
    }
    for (const auto& method : methods) {
      for (const auto& mt : manifest.transcribers) {
        const auto& cell = item.per_method.at(method).at(mt.id);
        auto& s = size_acc[method][mt.id];
        s.first += cell.at("size_ratio").get<double>();
        s.second += 1;
        auto& c = cons_acc[method][mt.id];
        c.first += cell.at("consistency_vs_reference").get<double>();
        c.second += 1;
      }
    }
  }
  report["items"] = std::move(items_json);

  ordered_json aggregate;
  ordered_json mean_size = ordered_json::object();
  ordered_json mean_consistency = ordered_json::object();
  for (const auto& method : methods) {
    ordered_json ms = ordered_json::object(), mc = ordered_json::object();
    for (const auto& mt : manifest.transcribers) {
      const auto& s = size_acc[method][mt.id];
      const auto& c = cons_acc[method][mt.id];
      ms[mt.id] = s.second == 0 ? 0.0 : s.first / static_cast<double>(s.second);
      mc[mt.id] = c.second == 0 ? 0.0 : c.first / static_cast<double>(c.second);
    }
    mean_size[method] = std::move(ms);
    mean_consistency[method] = std::move(mc);
  }
  aggregate["mean_size"] = std::move(mean_size);
  aggregate["mean_consistency"] = std::move(mean_consistency);
  aggregate["items_failed"] = failed;
  report["aggregate"] = std::move(aggregate);

  write_output(out_path, report.dump(2) + "\n");

  std::printf("%-8s %-20s %12s %12s\n", "method", "transcriber", "mean_size", "consistency");
  for (const auto& method : methods)
    for (const auto& mt : manifest.transcribers)
      std::printf("%-8s %-20s %12.4f %12.4f\n", method.c_str(), mt.id.c_str(),
                  report["aggregate"]["mean_size"][method][mt.id].get<double>(),
                  report["aggregate"]["mean_consistency"][method][mt.id].get<double>());

  return failed > 0 ? 4 : 0;
}

int run_synth(const std::string& toy_spec_path, int frames, int frame_length, int rate,
              const std::string& out_path) {
  const asrx::ToyAsrSpec spec = asrx::load_toy_spec(toy_spec_path);
  int n = frames;
  if (n <= 0)
    for (const auto& w : spec.words) n = std::max(n, w.end_frame);
  if (n <= 0) {
    std::cerr << "synth: toy spec has no words and no --frames given\n";
    return 1;
  }
  asrx::write_wav_file(out_path, asrx::make_toy_audio(spec, n, frame_length, rate));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Black-box explanations for speech-to-text transcriptions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value file");

  CommonFlags explain_flags;
  std::string audio_path, method = "sfl", toy_spec_path, endpoint, out_path = "-";
  std::string mask_wav_path, plot_csv_path;
  CLI::App* explain = app.add_subcommand("explain", "Explain one transcription");
  explain->add_option("--audio", audio_path, "Input WAV (PCM 16-bit mono)")->required();
  explain->add_option("--method", method, "Ranking method: sfl, causal or lime")
      ->check(CLI::IsMember({"sfl", "causal", "lime"}))
      ->capture_default_str();
  explain->add_option("--toy-spec", toy_spec_path, "Toy transcriber spec (JSON)");
  explain->add_option("--endpoint", endpoint, "HTTP transcriber endpoint");
  explain->add_option("--out", out_path, "Explanation JSON output ('-' = stdout)")
      ->capture_default_str();
  explain->add_option("--mask-wav", mask_wav_path, "Write the explanation audio as WAV");
  explain->add_option("--plot-csv", plot_csv_path,
                      "Write per-sample amplitude + in-explanation flag as CSV");
  add_common_flags(explain, &explain_flags);

  CommonFlags eval_flags;
  std::string manifest_path, reference_flag, eval_out = "-";
  std::vector<std::string> methods = {"sfl", "causal", "lime"};
  CLI::App* evaluate = app.add_subcommand("evaluate", "Batch evaluation over a manifest");
  evaluate->add_option("--manifest", manifest_path, "Manifest JSON")->required();
  evaluate->add_option("--methods", methods, "Methods to evaluate")
      ->delimiter(',')
      ->capture_default_str();
  evaluate->add_option("--reference", reference_flag,
                       "Reference transcriber id for consistency (default: manifest)");
  evaluate->add_option("--out", eval_out, "Report JSON output ('-' = stdout)")
      ->capture_default_str();
  add_common_flags(evaluate, &eval_flags);

  std::string synth_spec, synth_out;
  int synth_frames = 0, synth_frame_length = 512, synth_rate = 16000;
  CLI::App* synth = app.add_subcommand("synth", "Render a toy spec as a WAV file");
  synth->add_option("--toy-spec", synth_spec, "Toy transcriber spec (JSON)")->required();
  synth->add_option("--frames", synth_frames, "Frame count (default: last word end)");
  synth->add_option("--frame-length", synth_frame_length, "Samples per frame")
      ->capture_default_str();
  synth->add_option("--rate", synth_rate, "Sample rate, Hz")->capture_default_str();
  synth->add_option("--out", synth_out, "Output WAV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (explain->parsed())
      return run_explain(explain_flags, audio_path, method, toy_spec_path, endpoint, out_path,
                         mask_wav_path, plot_csv_path);
    if (evaluate->parsed())
      return run_evaluate(eval_flags, manifest_path, methods, reference_flag, eval_out);
    if (synth->parsed())
      return run_synth(synth_spec, synth_frames, synth_frame_length, synth_rate, synth_out);
  } catch (const asrx::TranscriberError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const asrx::ProviderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
