// Copyright 2026 The smeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SMEVAL_SYNTHESIS_HPP_
#define SMEVAL_SYNTHESIS_HPP_

/**
 * @file synthesis.hpp
 * @brief Synthetic multimap worlds with known ground truth, and brute-force
 * oracles for the reachability metrics.
 *
 * World model: a straight corridor of `num_places` places, kPlaceSpacing
 * meters apart along x, each with a random heading and a latent unit
 * descriptor. The agent records one frame per place at `frame_period`
 * intervals, walking forward along the corridor. Each submap after the
 * first starts, with probability `revisit_probability`, at a uniformly
 * chosen previously seen place (a revisit); otherwise it continues at the
 * first unseen place. Between submaps a dropout gap elapses. Frame poses in
 * the trajectory are relative to the first frame of their submap, the
 * ground-truth track holds the absolute place poses.
 *
 * Frame descriptor = normalize(latent + sigma * n), n ~ N(0, I),
 * rounded to float32 so that files round-trip exactly.
 *
 * Random numbers: std::mt19937_64 (its output sequence is fixed by the C++
 * standard), with the distributions implemented here rather than taken
 * from <random>:
 *   uniform01()   = (x >> 11) * 2^-53
 *   uniform(a, b) = a + (b - a) * uniform01()
 *   index(n)      = min(n - 1, floor(n * uniform01()))
 *   normal()      = sqrt(-2 ln(1 - u1)) * cos(2 pi u2)   (Box-Muller)
 * Four streams are seeded from rng_seed via SplitMix64 (structure, place
 * headings, latent descriptors, descriptor noise), so changing the noise
 * level leaves the world layout and latent descriptors unchanged.
 */

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "smeval/core_model.hpp"
#include "smeval/ingest.hpp"
#include "smeval/reachability.hpp"

namespace smeval {

inline constexpr double kPlaceSpacing = 25.0;  // meters

/// Seedable generator with portable, documented distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// SplitMix64 step, used to derive independent stream seeds.
  static std::uint64_t SplitMix64(std::uint64_t x);

  std::uint64_t next() { return engine_(); }
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::size_t index(std::size_t n);
  /// Inclusive integer range.
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  double normal();

 private:
  std::mt19937_64 engine_;
};

struct WorldConfig {
  std::size_t num_places = 2000;
  std::size_t num_submaps = 12;
  std::size_t frames_per_submap_min = 10;
  std::size_t frames_per_submap_max = 30;
  double revisit_probability = 0.5;
  std::size_t descriptor_dim = 128;
  double descriptor_noise_sigma = 0.1;
  double dropout_gap_min = 5.0;  ///< seconds
  double dropout_gap_max = 60.0;
  double frame_period = 1.0;  ///< seconds
  std::uint64_t rng_seed = 42;

  /// Throws Error(kInvalidConfig). The corridor must be long enough for
  /// every frame to find an unseen place:
  /// num_places >= num_submaps * frames_per_submap_max.
  void Validate() const;
};

struct World {
  Trajectory trajectory;  ///< with descriptor rows attached
  DescriptorSet descriptors;
  GroundTruthTrack ground_truth;
  /// Submaps sharing at least one place.
  AdjacencyMatrix shared_place_adjacency;
  /// Place index of every frame.
  std::vector<std::size_t> frame_place;
};

/// Deterministic in cfg (including rng_seed).
World GenerateWorld(const WorldConfig& cfg);

/// Connected components by breadth-first search.
ReachabilityMatrix ClosureOracle(const AdjacencyMatrix& a);

/// Explicit enumeration of all ordered frame pairs in distinct submaps,
/// tallying TP/FP by the reachability of their submaps. Same conventions as
/// ComputePrecisionCoverage. Throws Error(kDegenerateEvaluation) for M < 2.
PrecisionCoverage MetricsOracle(const ReachabilityMatrix& r,
                                const ReachabilityMatrix& r_gt,
                                const Trajectory& traj);

}  // namespace smeval

#endif  // SMEVAL_SYNTHESIS_HPP_
