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

#include "asrx/engine.hpp"

#include <stdexcept>

namespace asrx {

std::string method_name(Method m) {
  switch (m) {
    case Method::kSfl: return "sfl";
    case Method::kCausal: return "causal";
    case Method::kLime: return "lime";
  }
  throw std::logic_error("unknown method");
}

Method method_from_name(const std::string& name) {
  if (name == "sfl") return Method::kSfl;
  if (name == "causal") return Method::kCausal;
  if (name == "lime") return Method::kLime;
  throw std::invalid_argument("unknown explanation method: " + name);
}

ExplainOutcome explain_audio(const Audio& audio, Transcriber& transcriber,
                             TranscriptionCache* cache, SemanticProvider* provider,
                             const EngineConfig& cfg) {
  validate(cfg.classifier);
  const FrameGrid grid = frame_grid(audio, cfg.frame_length);
  TranscriptionService service(transcriber, cache, cfg.max_in_flight);

  const Transcript original = service.original(audio);
  if (original.empty())
    throw std::invalid_argument("explain: the unmasked audio transcribes to an empty transcript");

  FrameRanking ranking;
  switch (cfg.method) {
    case Method::kSfl: {
      MutationConfig mc = cfg.mutation;
      mc.seed = cfg.seed;
      const auto mutants =
          generate_mutants(audio, grid, service, original, cfg.classifier, provider, mc);
      ranking = rank_sfl(mutants, grid.n_frames);
      break;
    }
    case Method::kLime: {
      MutationConfig mc = cfg.mutation;
      mc.seed = cfg.seed;
      const auto mutants =
          generate_mutants(audio, grid, service, original, cfg.classifier, provider, mc);
      ranking = rank_lime(mutants, grid.n_frames, cfg.lime);
      break;
    }
    case Method::kCausal: {
      CausalConfig cc = cfg.causal;
      cc.seed = cfg.seed;
      ranking = refine_and_rank(audio, grid, service, original, cfg.classifier, provider, cc);
      break;
    }
  }

  ExplainOutcome outcome;
  outcome.explanation = build_explanation(ranking, audio, grid, service, original, cfg.classifier,
                                          provider, method_name(cfg.method), cfg.seed);
  outcome.real_calls = service.real_calls();
  return outcome;
}

}  // namespace asrx
