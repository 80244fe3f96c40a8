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

#include "smeval/merge_rules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace smeval {

AdjacencyMatrix ThresholdAdjacency(const SubmapDistanceMatrix& s, double tau) {
  if (std::isnan(tau)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold is NaN");
  }
  const std::size_t m = s.size();
  std::vector<std::uint8_t> a(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    a[i * m + i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint8_t hit = s.at(i, j) <= tau ? 1 : 0;
      a[i * m + j] = hit;
      a[j * m + i] = hit;
    }
  }
  return AdjacencyMatrix(m, std::move(a));
}

AdjacencyMatrix CombinedAdjacency(const SubmapDistanceMatrix& s_time,
                                  const SubmapDistanceMatrix& s_vpr,
                                  const MergeRuleParams& params,
                                  double tau_vpr) {
  if (params.kind != RuleKind::kCombined) {
    throw Error(ErrorCode::kInvalidArgument,
                "combined adjacency needs combined rule parameters");
  }
  params.Validate();
  if (s_time.kind() != DistanceKind::kTime ||
      s_vpr.kind() != DistanceKind::kVpr) {
    throw Error(ErrorCode::kInvalidArgument,
                "combined adjacency needs a time and a vpr distance matrix");
  }
  if (s_time.size() != s_vpr.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "time and vpr matrices have different submap counts");
  }
  if (std::isnan(tau_vpr)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold is NaN");
  }
  const double relaxed_time = params.f_time * params.tau_time;
  const double relaxed_vpr = params.f_vpr * tau_vpr;
  const std::size_t m = s_time.size();
  std::vector<std::uint8_t> a(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    a[i * m + i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      const double t = s_time.at(i, j);
      const double v = s_vpr.at(i, j);
      const bool hit = v <= tau_vpr || t <= params.tau_time ||
                       (t <= relaxed_time && v <= relaxed_vpr);
      a[i * m + j] = hit ? 1 : 0;
      a[j * m + i] = hit ? 1 : 0;
    }
  }
  return AdjacencyMatrix(m, std::move(a));
}

double GeodesicAngleDeg(const Quat& q1, const Quat& q2) {
  const double dot = std::clamp(std::abs(q1.coeffs().dot(q2.coeffs())), -1.0, 1.0);
  return 2.0 * std::acos(dot) * 180.0 / std::numbers::pi;
}

AdjacencyMatrix GroundTruthAdjacency(const AlignedTrajectory& aligned,
                                     double eps_dist, double eps_rot_deg) {
  if (!(eps_dist > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eps_dist must be positive");
  }
  if (!(eps_rot_deg > 0.0) || eps_rot_deg > 180.0) {
    throw Error(ErrorCode::kInvalidArgument, "eps_rot must be in (0, 180]");
  }
  const Trajectory& traj = aligned.trajectory();
  const std::size_t m = traj.submap_count();
  const double eps_dist_sq = eps_dist * eps_dist;
  std::vector<std::uint8_t> a(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    a[i * m + i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      bool hit = false;
      for (const std::size_t fa : traj.submap_frames(i)) {
        const Vec3& pa = aligned.gt_position(fa);
        const Quat& qa = aligned.gt_orientation(fa);
        for (const std::size_t fb : traj.submap_frames(j)) {
          if ((pa - aligned.gt_position(fb)).squaredNorm() > eps_dist_sq) {
            continue;
          }
          if (GeodesicAngleDeg(qa, aligned.gt_orientation(fb)) <= eps_rot_deg) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      a[i * m + j] = hit ? 1 : 0;
      a[j * m + i] = hit ? 1 : 0;
    }
  }
  return AdjacencyMatrix(m, std::move(a));
}

}  // namespace smeval
