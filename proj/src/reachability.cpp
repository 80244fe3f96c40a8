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

#include "smeval/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "smeval/merge_rules.hpp"

namespace smeval {
namespace {

using Bits = std::vector<std::uint8_t>;

// Boolean product P = X * X for a square 0/1 matrix stored row-major.
Bits BooleanSquare(const Bits& x, std::size_t m) {
  Bits p(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint8_t* out = p.data() + i * m;
    for (std::size_t k = 0; k < m; ++k) {
      if (!x[i * m + k]) continue;
      const std::uint8_t* row = x.data() + k * m;
      for (std::size_t j = 0; j < m; ++j) out[j] |= row[j];
    }
  }
  return p;
}

bool IsSubset(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] && !b[k]) return false;
  }
  return true;
}

std::vector<double> OffDiagonalValues(const SubmapDistanceMatrix& s) {
  std::vector<double> v;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) v.push_back(s.at(i, j));
  }
  return v;
}

}  // namespace

ReachabilityMatrix TransitiveClosure(const AdjacencyMatrix& a) {
  const std::size_t m = a.size();
  Bits r(a.values().begin(), a.values().end());
  // The diagonal is true, so each squaring doubles the path length covered.
  while (true) {
    Bits next = BooleanSquare(r, m);
    if (next == r) break;
    r = std::move(next);
  }
  return ReachabilityMatrix(m, std::move(r));
}

ReachabilityMatrix ClosureUnionFind(const AdjacencyMatrix& a) {
  const std::size_t m = a.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (a.at(i, j)) parent[find(i)] = find(j);
    }
  }
  Bits r(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) r[i * m + j] = find(i) == find(j);
  }
  return ReachabilityMatrix(m, std::move(r));
}

WeightVector ComputeWeightVector(const Trajectory& traj) {
  std::vector<std::uint64_t> w(traj.submap_count());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = traj.submap_frames(j).size();
  return WeightVector(std::move(w));
}

PrecisionCoverage ComputePrecisionCoverage(const ReachabilityMatrix& r,
                                           const ReachabilityMatrix& r_gt,
                                           const WeightVector& w) {
  const std::size_t m = r.size();
  if (r_gt.size() != m || w.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "reachability matrices and weights disagree on submap count");
  }
  if (m < 2) {
    throw Error(ErrorCode::kDegenerateEvaluation,
                "precision and coverage need at least two submaps");
  }
  // Weights are integers, so every partial sum below is exact in a double.
  double total = 0.0, tp = 0.0, fp = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double wij = static_cast<double>(w[i]) * static_cast<double>(w[j]);
      total += wij;
      if (!r.at(i, j)) continue;
      if (r_gt.at(i, j)) {
        tp += wij;
      } else {
        fp += wij;
      }
    }
  }
  PrecisionCoverage pc;
  pc.weighted_tp = tp;
  pc.weighted_fp = fp;
  if (tp + fp > 0.0) {
    pc.precision = tp / (tp + fp);
    pc.coverage = (tp + fp) / total;
  }
  return pc;
}

Curve SweepCurve(const MergeRuleParams& rule, const SubmapDistanceMatrix* s_time,
                 const SubmapDistanceMatrix* s_vpr,
                 const ReachabilityMatrix& r_gt, const WeightVector& w) {
  rule.Validate();
  const bool needs_time = rule.kind != RuleKind::kVpr;
  const bool needs_vpr = rule.kind != RuleKind::kTime;
  if ((needs_time && s_time == nullptr) || (needs_vpr && s_vpr == nullptr)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("rule ") + std::string(RuleKindName(rule.kind)) +
                    " is missing a distance matrix");
  }
  if (needs_time && s_time->kind() != DistanceKind::kTime) {
    throw Error(ErrorCode::kInvalidArgument, "expected a time distance matrix");
  }
  if (needs_vpr && s_vpr->kind() != DistanceKind::kVpr) {
    throw Error(ErrorCode::kInvalidArgument, "expected a vpr distance matrix");
  }
  const SubmapDistanceMatrix& swept = needs_vpr ? *s_vpr : *s_time;
  if (swept.size() != r_gt.size() ||
      (needs_time && needs_vpr && s_time->size() != s_vpr->size())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distance matrices and ground truth disagree on submap count");
  }

  std::vector<double> thresholds = OffDiagonalValues(swept);
  if (rule.kind == RuleKind::kCombined) {
    const std::size_t n = thresholds.size();
    for (std::size_t k = 0; k < n; ++k) {
      // Smallest tau whose relaxed bound f_vpr * tau reaches the value.
      double tau = thresholds[k] / rule.f_vpr;
      while (rule.f_vpr * tau < thresholds[k]) {
        tau = std::nextafter(tau, std::numeric_limits<double>::infinity());
      }
      thresholds.push_back(tau);
    }
  }
  thresholds.push_back(-std::numeric_limits<double>::infinity());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  auto adjacency_at = [&](double tau) {
    return rule.kind == RuleKind::kCombined
               ? CombinedAdjacency(*s_time, *s_vpr, rule, tau)
               : ThresholdAdjacency(swept, tau);
  };

  std::vector<CurvePoint> points;
  points.reserve(thresholds.size());
  std::optional<ReachabilityMatrix> reach;
  PrecisionCoverage pc;
  for (const double tau : thresholds) {
    const AdjacencyMatrix a = adjacency_at(tau);
    // Adjacency grows with tau; if every new edge is already reachable the
    // closure, and therefore the score, is unchanged.
    if (!reach || !IsSubset(a.values(), reach->values())) {
      reach = TransitiveClosure(a);
      pc = ComputePrecisionCoverage(*reach, r_gt, w);
    }
    points.push_back({tau, pc.precision, pc.coverage, pc.weighted_tp,
                      pc.weighted_fp});
  }
  return Curve(std::move(points));
}

double Auc(std::span<const CurvePoint> points) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "AUC of an empty curve");
  }
  // (coverage, best precision at that coverage)
  std::vector<std::pair<double, double>> collapsed;
  for (const CurvePoint& p : points) {
    if (!collapsed.empty() && collapsed.back().first > p.coverage) {
      throw Error(ErrorCode::kInvalidArgument,
                  "curve points must be sorted by coverage");
    }
    if (!collapsed.empty() && collapsed.back().first == p.coverage) {
      collapsed.back().second = std::max(collapsed.back().second, p.precision);
    } else {
      collapsed.emplace_back(p.coverage, p.precision);
    }
  }
  if (collapsed.front().first > 0.0) {
    collapsed.insert(collapsed.begin(), {0.0, collapsed.front().second});
  }
  double area = 0.0;
  for (std::size_t k = 1; k < collapsed.size(); ++k) {
    const auto [c0, p0] = collapsed[k - 1];
    const auto [c1, p1] = collapsed[k];
    area += (c1 - c0) * (p0 + p1) / 2.0;
  }
  return std::clamp(area, 0.0, 1.0);
}

std::vector<FramePrPoint> FramePrecisionRecall(const FrameDistanceMatrix& fdm,
                                               const AlignedTrajectory& aligned,
                                               double eps_dist,
                                               double eps_rot_deg,
                                               double min_time_separation) {
  if (!(eps_dist > 0.0) || !(eps_rot_deg > 0.0) || eps_rot_deg > 180.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "eps_dist must be positive and eps_rot in (0, 180]");
  }
  if (!(min_time_separation >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "min_time_separation must be non-negative");
  }
  const Trajectory& traj = aligned.trajectory();
  const std::size_t n = traj.frame_count();
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = traj.frame(i).descriptor_row;
    if (!row) {
      throw Error(ErrorCode::kMissingDescriptor,
                  "frame " + std::to_string(i) + " has no descriptor");
    }
    if (*row >= fdm.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "descriptor row out of range of the distance matrix");
    }
    rows[i] = *row;
  }

  const double eps_dist_sq = eps_dist * eps_dist;
  std::vector<std::pair<double, bool>> pairs;  // (distance, is true match)
  std::size_t positives = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (std::abs(traj.frame(b).timestamp - traj.frame(a).timestamp) <
          min_time_separation) {
        continue;
      }
      const bool match =
          (aligned.gt_position(a) - aligned.gt_position(b)).squaredNorm() <=
              eps_dist_sq &&
          GeodesicAngleDeg(aligned.gt_orientation(a),
                           aligned.gt_orientation(b)) <= eps_rot_deg;
      positives += match ? 1 : 0;
      pairs.emplace_back(fdm.at(rows[a], rows[b]), match);
    }
  }
  if (positives == 0) {
    throw Error(ErrorCode::kNoGroundTruthMatches,
                "no frame pair is a ground-truth match; recall is undefined");
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<FramePrPoint> curve;
  curve.push_back({-std::numeric_limits<double>::infinity(), 1.0, 0.0, 0, 0,
                   positives});
  std::size_t tp = 0, fp = 0;
  for (std::size_t k = 0; k < pairs.size();) {
    const double tau = pairs[k].first;
    for (; k < pairs.size() && pairs[k].first == tau; ++k) {
      (pairs[k].second ? tp : fp) += 1;
    }
    FramePrPoint p;
    p.threshold = tau;
    p.true_positives = tp;
    p.false_positives = fp;
    p.false_negatives = positives - tp;
    p.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    p.recall = static_cast<double>(tp) / static_cast<double>(positives);
    curve.push_back(p);
  }
  return curve;
}

}  // namespace smeval
