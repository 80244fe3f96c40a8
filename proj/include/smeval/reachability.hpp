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

#ifndef SMEVAL_REACHABILITY_HPP_
#define SMEVAL_REACHABILITY_HPP_

/**
 * @file reachability.hpp
 * @brief Reachability closure and frame-weighted precision/coverage.
 *
 * Two submaps are reachable when the transform between them is known
 * directly (adjacent) or through a chain of adjacent submaps. Scores weight
 * each submap pair (i, j) by w_i * w_j, the number of frame pairs it
 * represents, and ignore the diagonal:
 *
 *   coverage  = sum(R . W) / sum(W)
 *   precision = sum(R . R_gt . W) / sum(R . W)
 *
 * where "." is the elementwise product and all sums run over off-diagonal
 * entries. With no off-diagonal reachability, precision is 1 and coverage 0.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "smeval/core_model.hpp"
#include "smeval/ingest.hpp"

namespace smeval {

/// Default minimum time between two frames for them to count as a
/// place-recognition pair in frame-level evaluation.
inline constexpr double kDefaultMinTimeSeparation = 30.0;

/// Reflexive-transitive closure by repeated boolean squaring of A until the
/// result stops changing (ceil(log2 M) products at most).
ReachabilityMatrix TransitiveClosure(const AdjacencyMatrix& a);

/// Same closure computed with union-find over connected components.
ReachabilityMatrix ClosureUnionFind(const AdjacencyMatrix& a);

WeightVector ComputeWeightVector(const Trajectory& traj);

struct PrecisionCoverage {
  double precision = 1.0;
  double coverage = 0.0;
  double weighted_tp = 0.0;
  double weighted_fp = 0.0;
};

/// Throws Error(kDimensionMismatch) on size mismatch and
/// Error(kDegenerateEvaluation) when M < 2.
PrecisionCoverage ComputePrecisionCoverage(const ReachabilityMatrix& r,
                                           const ReachabilityMatrix& r_gt,
                                           const WeightVector& w);

/// Sweeps the rule's free threshold over every value at which the
/// adjacency can change and returns the precision-coverage curve.
///
/// Candidate thresholds are -inf plus the distinct off-diagonal values of
/// the swept matrix (S_time for the time rule, S_vpr otherwise). For the
/// combined rule the relaxed clause switches at S_vpr / f_vpr, so those
/// values are candidates as well. `s_time` may be null for the vpr rule and
/// `s_vpr` for the time rule.
Curve SweepCurve(const MergeRuleParams& rule,
                 const SubmapDistanceMatrix* s_time,
                 const SubmapDistanceMatrix* s_vpr,
                 const ReachabilityMatrix& r_gt, const WeightVector& w);

/// Trapezoidal area under precision over coverage, on [0, max coverage].
/// Points must be sorted by coverage. Coverage ties collapse to their best
/// precision, and the curve is extended to c = 0 at the precision of its
/// first point. Nothing is credited beyond the largest coverage reached.
double Auc(std::span<const CurvePoint> points);

struct FramePrPoint {
  double threshold = 0.0;
  double precision = 1.0;
  double recall = 0.0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
};

/// Frame-level precision/recall of the descriptors alone. Ground-truth
/// matches are frame pairs with poses within (eps_dist, eps_rot_deg);
/// predictions are pairs with distance <= tau. Pairs closer than
/// min_time_separation seconds are ignored on both sides. Points are in
/// increasing threshold order, starting at -inf (no predictions).
///
/// Throws Error(kNoGroundTruthMatches) when no qualifying pair is a true
/// match, Error(kMissingDescriptor) for frames without descriptors.
std::vector<FramePrPoint> FramePrecisionRecall(
    const FrameDistanceMatrix& fdm, const AlignedTrajectory& aligned,
    double eps_dist, double eps_rot_deg,
    double min_time_separation = kDefaultMinTimeSeparation);

}  // namespace smeval

#endif  // SMEVAL_REACHABILITY_HPP_
