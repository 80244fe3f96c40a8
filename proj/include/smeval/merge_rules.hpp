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

#ifndef SMEVAL_MERGE_RULES_HPP_
#define SMEVAL_MERGE_RULES_HPP_

#include "smeval/core_model.hpp"
#include "smeval/ingest.hpp"

namespace smeval {

inline constexpr double kDefaultEpsDist = 10.0;  // meters
inline constexpr double kDefaultEpsRotDeg = 20.0;

/// Submaps i != j are adjacent iff S(i, j) <= tau. "Below the threshold" is
/// non-strict so each pair flips exactly at its own distance value.
AdjacencyMatrix ThresholdAdjacency(const SubmapDistanceMatrix& s, double tau);

/// Combined time + VPR rule, see MergeRuleParams.
///
/// Throws Error(kDimensionMismatch) when the matrices differ in size and
/// Error(kInvalidArgument) when the matrix kinds or params.kind are wrong.
AdjacencyMatrix CombinedAdjacency(const SubmapDistanceMatrix& s_time,
                                  const SubmapDistanceMatrix& s_vpr,
                                  const MergeRuleParams& params,
                                  double tau_vpr);

/// Minimal rotation angle between two orientations, 2 acos(|<q1, q2>|), in
/// degrees.
double GeodesicAngleDeg(const Quat& q1, const Quat& q2);

/// Submaps i != j are adjacent iff some frame of i and some frame of j have
/// ground-truth poses within eps_dist meters and eps_rot_deg degrees.
AdjacencyMatrix GroundTruthAdjacency(const AlignedTrajectory& aligned,
                                     double eps_dist = kDefaultEpsDist,
                                     double eps_rot_deg = kDefaultEpsRotDeg);

}  // namespace smeval

#endif  // SMEVAL_MERGE_RULES_HPP_
