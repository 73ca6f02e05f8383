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

#ifndef ASRX_ENGINE_HPP
#define ASRX_ENGINE_HPP

#include <cstdint>
#include <string>

#include "asrx/causal.hpp"
#include "asrx/explanation.hpp"
#include "asrx/lime.hpp"
#include "asrx/mutation.hpp"
#include "asrx/sfl.hpp"

namespace asrx {

enum class Method { kSfl, kCausal, kLime };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// One knob set for a full explanation run. `seed` feeds both the mutant
/// schedule and the causal partitioning; the seeds inside `mutation` and
/// `causal` are overridden with it.
struct EngineConfig {
  Method method = Method::kSfl;
  ClassifierConfig classifier{};
  MutationConfig mutation{};
  CausalConfig causal{};
  LimeConfig lime{};
  int frame_length = 512;
  int max_in_flight = 4;
  uint64_t seed = 0;
};

struct ExplainOutcome {
  Explanation explanation;
  long real_calls = 0;  // actual transcriber invocations, cache hits excluded
};

/// Transcribes the original audio, ranks frames with the configured method
/// and greedily builds the minimal sufficient explanation. SFL and LIME
/// share the same adaptively drawn mutant set (same seed, same schedule),
/// which keeps their transcriber budgets comparable.
ExplainOutcome explain_audio(const Audio& audio, Transcriber& transcriber,
                             TranscriptionCache* cache, SemanticProvider* provider,
                             const EngineConfig& cfg);

}  // namespace asrx

#endif  // ASRX_ENGINE_HPP
