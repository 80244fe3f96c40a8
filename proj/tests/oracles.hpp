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

#ifndef SMEVAL_TESTS_ORACLES_HPP_
#define SMEVAL_TESTS_ORACLES_HPP_

// Brute-force reference implementations and random instance builders shared
// by the unit tests and the acceptance suite. Everything here is written
// from the definitions, independently of the library code under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "smeval/core_model.hpp"
#include "smeval/error.hpp"
#include "smeval/ingest.hpp"
#include "smeval/reachability.hpp"

namespace smeval::testing {

using Bits = std::vector<std::uint8_t>;

inline AdjacencyMatrix RandomAdjacency(std::mt19937_64& rng, std::size_t m,
                                       double density) {
  std::bernoulli_distribution edge(density);
  Bits v(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    v[i * m + i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      v[i * m + j] = v[j * m + i] = edge(rng) ? 1 : 0;
    }
  }
  return AdjacencyMatrix(m, std::move(v));
}

/// Warshall's algorithm on the raw boolean matrix.
inline Bits WarshallClosure(const BoolMatrix& a) {
  const std::size_t m = a.size();
  Bits r(a.values().begin(), a.values().end());
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!r[i * m + k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (r[k * m + j]) r[i * m + j] = 1;
      }
    }
  }
  return r;
}

inline ReachabilityMatrix WarshallReachability(const AdjacencyMatrix& a) {
  return ReachabilityMatrix(a.size(), WarshallClosure(a));
}

/// Random trajectory with exactly m submaps and n >= m frames. Submaps
/// occupy contiguous runs of frames with random time gaps between runs.
inline Trajectory RandomTrajectory(std::mt19937_64& rng, std::size_t m,
                                   std::size_t n, bool attach_rows = true) {
  std::vector<std::size_t> sizes(m, 1);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::size_t k = m; k < n; ++k) ++sizes[pick(rng)];
  std::uniform_real_distribution<double> gap(0.0, 20.0);
  std::vector<FrameRecord> frames;
  double t = 0.0;
  std::size_t row = 0;
  for (std::size_t s = 0; s < m; ++s) {
    t += gap(rng);
    for (std::size_t f = 0; f < sizes[s]; ++f) {
      FrameRecord r;
      r.timestamp = t;
      r.position = Vec3(static_cast<double>(row), 0.0, 0.0);
      r.orientation = Quat::Identity();
      r.submap_id = static_cast<std::int64_t>(s);
      if (attach_rows) r.descriptor_row = row;
      frames.push_back(r);
      ++row;
      t += 1.0;
    }
  }
  return Trajectory::Validate(std::move(frames));
}

/// Gap between the time spans of two submaps, evaluated pairwise.
inline double TemporalGapOracle(const Trajectory& traj, std::size_t i,
                                std::size_t j) {
  double first_i = std::numeric_limits<double>::infinity();
  double last_i = -first_i, first_j = first_i, last_j = -first_i;
  for (const FrameRecord& f : traj.frames()) {
    if (f.submap_id == static_cast<std::int64_t>(i)) {
      first_i = std::min(first_i, f.timestamp);
      last_i = std::max(last_i, f.timestamp);
    }
    if (f.submap_id == static_cast<std::int64_t>(j)) {
      first_j = std::min(first_j, f.timestamp);
      last_j = std::max(last_j, f.timestamp);
    }
  }
  if (last_i < first_j) return first_j - last_i;
  if (last_j < first_i) return first_i - last_j;
  return 0.0;
}

/// Minimum frame distance over all frame pairs drawn from submaps i and j.
inline double AggregationOracle(const FrameDistanceMatrix& fdm,
                                const Trajectory& traj, std::size_t i,
                                std::size_t j) {
  if (i == j) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const FrameRecord& a : traj.frames()) {
    if (a.submap_id != static_cast<std::int64_t>(i)) continue;
    for (const FrameRecord& b : traj.frames()) {
      if (b.submap_id != static_cast<std::int64_t>(j)) continue;
      best = std::min(best, fdm.at(*a.descriptor_row, *b.descriptor_row));
    }
  }
  return best;
}

/// Trapezoidal area of an explicit polyline (x ascending).
inline double Trapezoid(const std::vector<std::pair<double, double>>& xy) {
  double area = 0.0;
  for (std::size_t k = 1; k < xy.size(); ++k) {
    area += (xy[k].first - xy[k - 1].first) *
            (xy[k].second + xy[k - 1].second) * 0.5;
  }
  return area;
}

/// Precision-coverage area from the definition: at every distinct coverage
/// keep the best precision, start the curve at coverage 0 with the first
/// precision, integrate up to the largest coverage reached.
inline double AucOracle(const std::vector<CurvePoint>& points) {
  std::map<double, double> best;
  for (const CurvePoint& p : points) {
    auto [it, inserted] = best.emplace(p.coverage, p.precision);
    if (!inserted) it->second = std::max(it->second, p.precision);
  }
  std::vector<std::pair<double, double>> xy(best.begin(), best.end());
  if (xy.front().first > 0.0) xy.insert(xy.begin(), {0.0, xy.front().second});
  return Trapezoid(xy);
}

/// Exhaustive frame-pair counting for the frame precision-recall curve.
struct FramePrCount {
  std::size_t tp = 0, fp = 0, positives = 0;
};

inline FramePrCount FramePrOracle(const FrameDistanceMatrix& fdm,
                                  const AlignedTrajectory& aligned, double tau,
                                  double eps_dist, double eps_rot_deg,
                                  double min_sep) {
  const Trajectory& traj = aligned.trajectory();
  FramePrCount c;
  for (std::size_t a = 0; a < traj.frame_count(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (std::abs(traj.frame(a).timestamp - traj.frame(b).timestamp) <
          min_sep) {
        continue;
      }
      const double dist =
          (aligned.gt_position(a) - aligned.gt_position(b)).norm();
      const Eigen::Matrix3d rel =
          aligned.gt_orientation(a).toRotationMatrix().transpose() *
          aligned.gt_orientation(b).toRotationMatrix();
      const double cos_angle =
          std::clamp((rel.trace() - 1.0) / 2.0, -1.0, 1.0);
      const double angle = std::acos(cos_angle) * 180.0 / std::numbers::pi;
      const bool match = dist <= eps_dist && angle <= eps_rot_deg;
      const bool predicted =
          fdm.at(*traj.frame(a).descriptor_row, *traj.frame(b).descriptor_row) <=
          tau;
      c.positives += match;
      if (predicted) (match ? c.tp : c.fp) += 1;
    }
  }
  return c;
}

/// Runs `f` and returns the code of the smeval::Error it throws, if any.
template <typename F>
std::optional<ErrorCode> ErrorCodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace smeval::testing

#endif  // SMEVAL_TESTS_ORACLES_HPP_
