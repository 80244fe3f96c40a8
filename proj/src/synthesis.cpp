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

#include "smeval/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <string>

namespace smeval {

std::uint64_t Rng::SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "index(0)");
  const auto k =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * uniform01()));
  return std::min(k, n - 1);
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty integer range");
  return lo + static_cast<std::int64_t>(
                  index(static_cast<std::size_t>(hi - lo) + 1));
}

double Rng::normal() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(1.0 - u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

void WorldConfig::Validate() const {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kInvalidConfig, why);
  };
  if (num_submaps < 1) fail("num_submaps must be at least 1");
  if (frames_per_submap_min < 1 ||
      frames_per_submap_min > frames_per_submap_max) {
    fail("frames_per_submap range must be non-empty and start at >= 1");
  }
  if (!(revisit_probability >= 0.0 && revisit_probability <= 1.0)) {
    fail("revisit_probability must be in [0, 1]");
  }
  if (descriptor_dim < 1) fail("descriptor_dim must be at least 1");
  if (!(descriptor_noise_sigma >= 0.0) || !std::isfinite(descriptor_noise_sigma)) {
    fail("descriptor_noise_sigma must be finite and >= 0");
  }
  if (!(dropout_gap_min >= 0.0) || !(dropout_gap_min <= dropout_gap_max) ||
      !std::isfinite(dropout_gap_max)) {
    fail("dropout gap range must be finite, non-negative and non-empty");
  }
  if (!(frame_period > 0.0) || !std::isfinite(frame_period)) {
    fail("frame_period must be positive");
  }
  if (num_places < num_submaps * frames_per_submap_max) {
    fail("num_places must be at least num_submaps * frames_per_submap_max");
  }
}

World GenerateWorld(const WorldConfig& cfg) {
  cfg.Validate();
  std::uint64_t state = cfg.rng_seed;
  auto derive = [&state]() {
    state = Rng::SplitMix64(state);
    return state;
  };
  Rng structure(derive());
  Rng headings(derive());
  Rng latents(derive());
  Rng noise(derive());

  const std::size_t dim = cfg.descriptor_dim;
  std::vector<double> place_yaw;
  std::vector<std::vector<double>> place_latent;
  auto introduce_places_up_to = [&](std::size_t count) {
    while (place_yaw.size() < count) {
      place_yaw.push_back(headings.uniform(-std::numbers::pi, std::numbers::pi));
      std::vector<double> v(dim);
      double sq = 0.0;
      for (double& x : v) {
        x = latents.normal();
        sq += x * x;
      }
      const double norm = std::sqrt(sq);
      for (double& x : v) x /= norm;
      place_latent.push_back(std::move(v));
    }
  };
  auto place_pose = [&](std::size_t place) {
    Eigen::Isometry3d pose = Eigen::Isometry3d::Identity();
    pose.translation() =
        Vec3(kPlaceSpacing * static_cast<double>(place), 0.0, 0.0);
    pose.linear() =
        Eigen::AngleAxisd(place_yaw[place], Vec3::UnitZ()).toRotationMatrix();
    return pose;
  };

  // Walk.
  std::vector<std::size_t> frame_place;
  std::vector<std::size_t> frame_submap;
  std::vector<double> frame_time;
  std::size_t frontier = 0;
  double t = 0.0;
  for (std::size_t s = 0; s < cfg.num_submaps; ++s) {
    const auto count = static_cast<std::size_t>(structure.integer(
        static_cast<std::int64_t>(cfg.frames_per_submap_min),
        static_cast<std::int64_t>(cfg.frames_per_submap_max)));
    std::size_t cursor = frontier;
    if (s > 0) {
      const bool revisit = structure.uniform01() < cfg.revisit_probability;
      const std::size_t anchor = structure.index(frontier);
      if (revisit) cursor = anchor;
      t = frame_time.back() +
          structure.uniform(cfg.dropout_gap_min, cfg.dropout_gap_max);
    }
    for (std::size_t f = 0; f < count; ++f) {
      frame_place.push_back(cursor);
      frame_submap.push_back(s);
      frame_time.push_back(t);
      ++cursor;
      frontier = std::max(frontier, cursor);
      t += cfg.frame_period;
    }
  }
  introduce_places_up_to(frontier);

  const std::size_t n = frame_place.size();
  const std::size_t m = cfg.num_submaps;

  // Descriptors.
  DescriptorSet::Matrix data(static_cast<Eigen::Index>(n),
                             static_cast<Eigen::Index>(dim));
  const double noise_scale = cfg.descriptor_noise_sigma;
  std::vector<double> v(dim);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& latent = place_latent[frame_place[i]];
    double sq = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      v[k] = latent[k] + noise_scale * noise.normal();
      sq += v[k] * v[k];
    }
    const double norm = std::sqrt(sq);
    for (std::size_t k = 0; k < dim; ++k) {
      data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          static_cast<double>(static_cast<float>(v[k] / norm));
    }
  }

  // Poses.
  std::vector<FrameRecord> frames(n);
  std::vector<GroundTruthSample> samples(n);
  Eigen::Isometry3d submap_origin = Eigen::Isometry3d::Identity();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Isometry3d abs_pose = place_pose(frame_place[i]);
    if (i == 0 || frame_submap[i] != frame_submap[i - 1]) {
      submap_origin = abs_pose;
    }
    const Eigen::Isometry3d rel = submap_origin.inverse() * abs_pose;
    frames[i].timestamp = frame_time[i];
    frames[i].submap_id = static_cast<std::int64_t>(frame_submap[i]);
    frames[i].position = rel.translation();
    frames[i].orientation = Quat(rel.linear()).normalized();
    frames[i].descriptor_row = i;
    samples[i].timestamp = frame_time[i];
    samples[i].position = abs_pose.translation();
    samples[i].orientation = Quat(abs_pose.linear()).normalized();
  }

  std::vector<std::vector<std::uint8_t>> visits(
      m, std::vector<std::uint8_t>(frontier, 0));
  for (std::size_t i = 0; i < n; ++i) visits[frame_submap[i]][frame_place[i]] = 1;
  std::vector<std::uint8_t> adj(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    adj[i * m + i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t p = 0; p < frontier; ++p) {
        if (visits[i][p] && visits[j][p]) {
          adj[i * m + j] = adj[j * m + i] = 1;
          break;
        }
      }
    }
  }

  return World{Trajectory::Validate(std::move(frames)),
               DescriptorSet(std::move(data)),
               GroundTruthTrack(std::move(samples)),
               AdjacencyMatrix(m, std::move(adj)), std::move(frame_place)};
}

ReachabilityMatrix ClosureOracle(const AdjacencyMatrix& a) {
  const std::size_t m = a.size();
  std::vector<std::size_t> component(m, m);
  std::size_t next_label = 0;
  for (std::size_t start = 0; start < m; ++start) {
    if (component[start] != m) continue;
    std::deque<std::size_t> queue{start};
    component[start] = next_label;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < m; ++v) {
        if (a.at(u, v) && component[v] == m) {
          component[v] = next_label;
          queue.push_back(v);
        }
      }
    }
    ++next_label;
  }
  std::vector<std::uint8_t> r(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) r[i * m + j] = component[i] == component[j];
  }
  return ReachabilityMatrix(m, std::move(r));
}

PrecisionCoverage MetricsOracle(const ReachabilityMatrix& r,
                                const ReachabilityMatrix& r_gt,
                                const Trajectory& traj) {
  const std::size_t m = traj.submap_count();
  if (r.size() != m || r_gt.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "reachability matrices disagree with the trajectory");
  }
  if (m < 2) {
    throw Error(ErrorCode::kDegenerateEvaluation,
                "precision and coverage need at least two submaps");
  }
  const auto frames = traj.frames();
  std::uint64_t pairs = 0, tp = 0, fp = 0;
  for (const FrameRecord& a : frames) {
    for (const FrameRecord& b : frames) {
      if (a.submap_id == b.submap_id) continue;
      const auto i = static_cast<std::size_t>(a.submap_id);
      const auto j = static_cast<std::size_t>(b.submap_id);
      ++pairs;
      if (!r.at(i, j)) continue;
      if (r_gt.at(i, j)) {
        ++tp;
      } else {
        ++fp;
      }
    }
  }
  PrecisionCoverage pc;
  pc.weighted_tp = static_cast<double>(tp);
  pc.weighted_fp = static_cast<double>(fp);
  if (tp + fp > 0) {
    pc.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    pc.coverage = static_cast<double>(tp + fp) / static_cast<double>(pairs);
  }
  return pc;
}

}  // namespace smeval
