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

#include "asrx/causal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace asrx {

Partition equal_partition(int n_frames, int count) {
  if (n_frames < 1) throw std::invalid_argument("partition: need at least one frame");
  const int m = std::min(std::max(count, 1), n_frames);
  Partition p(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    p[static_cast<size_t>(j)].begin = static_cast<int>((static_cast<long>(n_frames) * j) / m);
    p[static_cast<size_t>(j)].end = static_cast<int>((static_cast<long>(n_frames) * (j + 1)) / m);
  }
  return p;
}

Partition jittered_partition(int n_frames, int count, Rng& rng) {
  Partition p = equal_partition(n_frames, count);
  const int m = static_cast<int>(p.size());
  const int spread = std::max(1, n_frames / (3 * m));
  for (int j = 1; j < m; ++j) {
    int boundary = p[static_cast<size_t>(j)].begin;
    if (spread > 0)
      boundary += static_cast<int>(rng.below(static_cast<uint64_t>(2 * spread + 1))) - spread;
    // Keep every superframe non-empty.
    const int lo = p[static_cast<size_t>(j - 1)].begin + 1;
    const int hi = n_frames - (m - j);
    boundary = std::clamp(boundary, lo, hi);
    p[static_cast<size_t>(j - 1)].end = boundary;
    p[static_cast<size_t>(j)].begin = boundary;
  }
  return p;
}

void validate_partition(const Partition& partition, int n_frames) {
  if (partition.empty()) throw std::invalid_argument("partition: empty");
  int cursor = 0;
  for (const Superframe& s : partition) {
    if (s.begin != cursor || s.end <= s.begin)
      throw std::invalid_argument("partition: superframes must be contiguous and non-empty");
    cursor = s.end;
  }
  if (cursor != n_frames) throw std::invalid_argument("partition: does not tile all frames");
}

FrameMask superframe_mask(const Partition& partition, std::span<const int> chosen,
                          const FrameGrid& grid) {
  std::vector<int> frames;
  for (int j : chosen) {
    if (j < 0 || static_cast<size_t>(j) >= partition.size())
      throw std::invalid_argument("superframe_mask: index out of range");
    const Superframe& s = partition[static_cast<size_t>(j)];
    for (int f = s.begin; f < s.end; ++f) frames.push_back(f);
  }
  return make_mask(std::move(frames), grid);
}

std::vector<SuperframeMutant> causal_mutants(const Partition& partition, const Audio& audio,
                                             const FrameGrid& grid, TranscriptionService& service,
                                             const Transcript& original,
                                             const ClassifierConfig& classifier,
                                             SemanticProvider* provider, int budget, Rng& rng) {
  validate_partition(partition, grid.n_frames);
  if (budget < 1) throw std::invalid_argument("causal_mutants: budget must be >= 1");
  const int m = static_cast<int>(partition.size());

  std::vector<std::vector<int>> subsets;
  const bool exhaustive = m < 63 && (1ull << m) <= static_cast<uint64_t>(budget);
  if (exhaustive) {
    for (uint64_t bits = 0; bits < (1ull << m); ++bits) {
      std::vector<int> chosen;
      for (int j = 0; j < m; ++j)
        if (bits & (1ull << j)) chosen.push_back(j);
      subsets.push_back(std::move(chosen));
    }
  } else {
    subsets.emplace_back();  // the unmasked mutant is always present
    for (int i = 0; i < budget; ++i) {
      std::vector<int> chosen;
      for (int j = 0; j < m; ++j)
        if (rng.next() & 1u) chosen.push_back(j);
      subsets.push_back(std::move(chosen));
    }
  }

  std::vector<FrameMask> masks;
  masks.reserve(subsets.size());
  for (const auto& chosen : subsets) masks.push_back(superframe_mask(partition, chosen, grid));
  std::vector<Transcript> transcripts = service.masked_batch(audio, grid, masks);

  std::vector<SuperframeMutant> mutants(subsets.size());
  for (size_t i = 0; i < subsets.size(); ++i) {
    mutants[i].masked = std::move(subsets[i]);
    mutants[i].verdict = classify(original, transcripts[i], classifier, provider);
    mutants[i].transcript = std::move(transcripts[i]);
  }
  return mutants;
}

std::vector<double> responsibility(const Partition& partition,
                                   std::span<const SuperframeMutant> mutants) {
  const int m = static_cast<int>(partition.size());
  std::vector<double> r(static_cast<size_t>(m), 0.0);
  for (int j = 0; j < m; ++j) {
    long k = -1;
    for (const SuperframeMutant& mu : mutants) {
      if (mu.verdict.label != Label::kCorrect) continue;
      if (std::binary_search(mu.masked.begin(), mu.masked.end(), j)) continue;
      const long diff = static_cast<long>(mu.masked.size());
      if (k < 0 || diff < k) k = diff;
    }
    r[static_cast<size_t>(j)] = k < 0 ? 0.0 : 1.0 / static_cast<double>(k + 1);
  }
  return r;
}

std::vector<double> responsibility_with_witness(const Partition& partition,
                                                std::span<const SuperframeMutant> mutants,
                                                const SubsetLabeler& label_of) {
  const int m = static_cast<int>(partition.size());
  std::vector<double> r(static_cast<size_t>(m), 0.0);
  for (int j = 0; j < m; ++j) {
    // Candidate witnesses ordered by size; the first whose combination with
    // j flips the label realizes the minimum k.
    std::vector<std::pair<size_t, size_t>> candidates;  // (diff, mutant index)
    for (size_t i = 0; i < mutants.size(); ++i) {
      const SuperframeMutant& mu = mutants[i];
      if (mu.verdict.label != Label::kCorrect) continue;
      if (std::binary_search(mu.masked.begin(), mu.masked.end(), j)) continue;
      candidates.emplace_back(mu.masked.size(), i);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [diff, idx] : candidates) {
      std::vector<int> combined = mutants[idx].masked;
      combined.insert(std::lower_bound(combined.begin(), combined.end(), j), j);
      if (label_of(combined) == Label::kIncorrect) {
        r[static_cast<size_t>(j)] = 1.0 / static_cast<double>(diff + 1);
        break;
      }
    }
  }
  return r;
}

void validate(const CausalConfig& cfg) {
  if (cfg.runs < 1) throw std::invalid_argument("causal: runs must be >= 1");
  if (cfg.initial_superframes < 1)
    throw std::invalid_argument("causal: initial_superframes must be >= 1");
  if (cfg.depth_limit < 0) throw std::invalid_argument("causal: depth_limit must be >= 0");
  if (cfg.budget < 1) throw std::invalid_argument("causal: budget must be >= 1");
}

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

bool all_single(const Partition& p) {
  for (const Superframe& s : p)
    if (s.size() > 1) return false;
  return true;
}

void accumulate(const Partition& partition, const std::vector<double>& r,
                std::vector<double>& scores) {
  for (size_t j = 0; j < partition.size(); ++j) {
    const Superframe& s = partition[j];
    const double share = r[j] / s.size();
    for (int f = s.begin; f < s.end; ++f) scores[static_cast<size_t>(f)] += share;
  }
}

}  // namespace

FrameRanking refine_and_rank(const Audio& audio, const FrameGrid& grid,
                             TranscriptionService& service, const Transcript& original,
                             const ClassifierConfig& classifier, SemanticProvider* provider,
                             const CausalConfig& cfg) {
  validate(cfg);
  if (grid.n_frames < 1) throw std::invalid_argument("refine_and_rank: audio has no frames");

  std::vector<double> scores(static_cast<size_t>(grid.n_frames), 0.0);
  for (int run = 0; run < cfg.runs; ++run) {
    Rng rng(derive_seed(cfg.seed, "causal/run" + std::to_string(run)));
    Partition partition = jittered_partition(grid.n_frames, cfg.initial_superframes, rng);

    for (int depth = 0;; ++depth) {
      const std::vector<SuperframeMutant> mutants = causal_mutants(
          partition, audio, grid, service, original, classifier, provider, cfg.budget, rng);

      std::vector<double> r;
      if (cfg.witness_check) {
        // Labels for combined subsets come from the level's labeled set when
        // present; otherwise one (cached) transcription fills the gap.
        std::map<std::vector<int>, Label> known;
        for (const SuperframeMutant& mu : mutants) known.emplace(mu.masked, mu.verdict.label);
        const SubsetLabeler label_of = [&](const std::vector<int>& subset) {
          if (auto it = known.find(subset); it != known.end()) return it->second;
          const FrameMask fm = superframe_mask(partition, subset, grid);
          const Label lab =
              classify(original, service.masked(audio, grid, fm), classifier, provider).label;
          known.emplace(subset, lab);
          return lab;
        };
        r = responsibility_with_witness(partition, mutants, label_of);
      } else {
        r = responsibility(partition, mutants);
      }

      if (all_single(partition) || depth >= cfg.depth_limit) {
        accumulate(partition, r, scores);
        break;
      }

      const double med = median(r);
      Partition next;
      for (size_t j = 0; j < partition.size(); ++j) {
        const Superframe& s = partition[j];
        if (r[j] >= med && s.size() >= 2) {
          const int mid = s.begin + (s.size() + 1) / 2;
          next.push_back({s.begin, mid});
          next.push_back({mid, s.end});
        } else {
          next.push_back(s);
        }
      }
      if (next == partition) {
        accumulate(partition, r, scores);
        break;
      }
      partition = std::move(next);
    }
  }
  return make_ranking(scores);
}

}  // namespace asrx
