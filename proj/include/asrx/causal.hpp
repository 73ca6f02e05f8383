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

#ifndef ASRX_CAUSAL_HPP
#define ASRX_CAUSAL_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "asrx/audio.hpp"
#include "asrx/ranking.hpp"
#include "asrx/rng.hpp"
#include "asrx/service.hpp"
#include "asrx/similarity.hpp"

namespace asrx {

/// Contiguous block of frames [begin, end). A partition is an ordered list
/// of superframes tiling [0, n_frames) without overlap.
struct Superframe {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
  bool operator==(const Superframe&) const = default;
};

using Partition = std::vector<Superframe>;

Partition equal_partition(int n_frames, int count);

/// Equal partition with seeded jitter on the interior boundaries; distinct
/// runs use distinct jitters so their superframe edges disagree.
Partition jittered_partition(int n_frames, int count, Rng& rng);

void validate_partition(const Partition& partition, int n_frames);

/// Frame mask covering the chosen superframes (indices into the partition).
FrameMask superframe_mask(const Partition& partition, std::span<const int> chosen,
                          const FrameGrid& grid);

/// A mutant at superframe granularity: `masked` lists partition indices,
/// sorted ascending.
struct SuperframeMutant {
  std::vector<int> masked;
  Transcript transcript;
  Verdict verdict;
};

/// All 2^|P| subsets when that fits the budget, otherwise `budget` subsets
/// sampled uniformly at random plus the empty subset. Every mutant is
/// transcribed (through the cache) and labeled against the original.
std::vector<SuperframeMutant> causal_mutants(const Partition& partition, const Audio& audio,
                                             const FrameGrid& grid, TranscriptionService& service,
                                             const Transcript& original,
                                             const ClassifierConfig& classifier,
                                             SemanticProvider* provider, int budget, Rng& rng);

/// Responsibility of superframe j from a labeled mutant set:
///   k = min |masked(x_m)| over mutants x_m that leave j unmasked and are
///   Correct; r_j = 1/(k+1), or 0 when no mutant qualifies.
/// diff is counted at the granularity of the partition in force.
std::vector<double> responsibility(const Partition& partition,
                                   std::span<const SuperframeMutant> mutants);

/// Labels an arbitrary superframe subset (sorted partition indices).
using SubsetLabeler = std::function<Label(const std::vector<int>&)>;

/// Responsibility with the witness condition enforced: a mutant x_m only
/// qualifies for superframe j if additionally masking j flips the label to
/// Incorrect. The combined subset's label comes from `label_of`, which can
/// consult the already-labeled set or issue a cached transcription.
std::vector<double> responsibility_with_witness(const Partition& partition,
                                                std::span<const SuperframeMutant> mutants,
                                                const SubsetLabeler& label_of);

struct CausalConfig {
  int runs = 3;                // independent partitionings aggregated
  int initial_superframes = 4;
  int depth_limit = 6;
  int budget = 100;            // mutants per refinement level
  bool witness_check = true;   // false = take any Correct mutant as evidence
  uint64_t seed = 0;
};

void validate(const CausalConfig& cfg);

/// Iterative superframe refinement: per run, compute responsibilities,
/// split every superframe with r >= median(r) into two halves (when every
/// responsibility is equal this splits everything), and repeat until all
/// superframes are single frames or the depth limit is hit. Each frame then
/// accumulates r/|superframe| from the finest map containing it; the runs
/// aggregate by summation.
FrameRanking refine_and_rank(const Audio& audio, const FrameGrid& grid,
                             TranscriptionService& service, const Transcript& original,
                             const ClassifierConfig& classifier, SemanticProvider* provider,
                             const CausalConfig& cfg);

}  // namespace asrx

#endif  // ASRX_CAUSAL_HPP
