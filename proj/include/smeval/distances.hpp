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

#ifndef SMEVAL_DISTANCES_HPP_
#define SMEVAL_DISTANCES_HPP_

#include <cstddef>
#include <string_view>

#include "smeval/core_model.hpp"

namespace smeval {

enum class DescriptorMetric { kCosine, kEuclidean };

std::string_view DescriptorMetricName(DescriptorMetric metric);

/// Temporal distance between submaps: the length of the gap between their
/// time spans, 0 if the spans overlap.
SubmapDistanceMatrix TemporalSubmapDistances(const Trajectory& traj);

/// Distance between two descriptor rows. Cosine distance is
/// 1 - a.b / (|a||b|), clamped to [0, 2]; identical rows give exactly 0.
double DescriptorDistance(const DescriptorSet& descs, std::size_t a,
                          std::size_t b, DescriptorMetric metric);

/// All-pairs frame distances. Row blocks are spread over `threads` workers
/// (0 picks the hardware concurrency); the result does not depend on the
/// thread count.
///
/// Throws Error(kZeroNormDescriptor) for a zero row under the cosine metric.
FrameDistanceMatrix FrameDescriptorDistances(
    const DescriptorSet& descs,
    DescriptorMetric metric = DescriptorMetric::kCosine,
    unsigned threads = 0);

/// S_vpr(i, j) = smallest frame distance between a frame of submap i and a
/// frame of submap j. Frames are looked up through their descriptor_row.
///
/// Throws Error(kMissingDescriptor) if a frame has no descriptor row.
SubmapDistanceMatrix AggregateToSubmaps(const FrameDistanceMatrix& fdm,
                                        const Trajectory& traj);

/// Same result as AggregateToSubmaps(FrameDescriptorDistances(...)) without
/// materializing the N x N frame matrix; pair distances are folded into the
/// M x M result as they are computed.
SubmapDistanceMatrix StreamingSubmapDistances(
    const DescriptorSet& descs, const Trajectory& traj,
    DescriptorMetric metric = DescriptorMetric::kCosine);

}  // namespace smeval

#endif  // SMEVAL_DISTANCES_HPP_
