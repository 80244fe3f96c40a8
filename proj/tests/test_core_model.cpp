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

#include "doctest.h"
#include "oracles.hpp"
#include "smeval/core_model.hpp"

using namespace smeval;
using smeval::testing::ErrorCodeOf;

namespace {

FrameRecord Frame(double t, std::int64_t id) {
  FrameRecord f;
  f.timestamp = t;
  f.submap_id = id;
  return f;
}

std::vector<std::int64_t> Ids(const Trajectory& traj) {
  std::vector<std::int64_t> ids;
  for (const FrameRecord& f : traj.frames()) ids.push_back(f.submap_id);
  return ids;
}

}  // namespace

TEST_CASE("validate re-indexes submap ids by first appearance") {
  const Trajectory a =
      Trajectory::Validate({Frame(0, 7), Frame(1, 7), Frame(2, 9)});
  CHECK(Ids(a) == std::vector<std::int64_t>{0, 0, 1});
  CHECK(a.submap_count() == 2);
  CHECK(a.frame_count() == 3);

  const Trajectory b = Trajectory::Validate({Frame(0, 0)});
  CHECK(b.submap_count() == 1);
  CHECK(b.frame_count() == 1);

  const Trajectory c =
      Trajectory::Validate({Frame(0, 2), Frame(1, 0), Frame(2, 2)});
  CHECK(Ids(c) == std::vector<std::int64_t>{0, 1, 0});
  CHECK(c.submap_count() == 2);
  CHECK(c.submap_frames(0).size() == 2);
  CHECK(c.submap_frames(1)[0] == 1);

  const Trajectory d = Trajectory::Validate({Frame(0, -4), Frame(1, 3)});
  CHECK(Ids(d) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("validate is idempotent") {
  const Trajectory a =
      Trajectory::Validate({Frame(0, 5), Frame(1, 3), Frame(2, 5)});
  const std::vector<FrameRecord> again(a.frames().begin(), a.frames().end());
  CHECK(Trajectory::Validate(again) == a);
}

TEST_CASE("validate rejects bad input") {
  CHECK(ErrorCodeOf([] { Trajectory::Validate({}); }) ==
        ErrorCode::kEmptyTrajectory);
  CHECK(ErrorCodeOf([] { Trajectory::Validate({Frame(2, 0), Frame(1, 0)}); }) ==
        ErrorCode::kNonMonotonicTimestamps);
  FrameRecord bad = Frame(0, 0);
  bad.orientation = Quat(2, 0, 0, 0);
  CHECK(ErrorCodeOf([&] { Trajectory::Validate({bad}); }) ==
        ErrorCode::kInvalidOrientation);
}

TEST_CASE("equal timestamps are allowed in a trajectory") {
  const Trajectory a = Trajectory::Validate({Frame(1, 0), Frame(1, 1)});
  CHECK(a.submap_count() == 2);
}

TEST_CASE("orientation normalization") {
  const Quat q = NormalizeOrientation(Quat(1.0005, 0, 0, 0));
  CHECK(q.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ErrorCodeOf([] { NormalizeOrientation(Quat(0.5, 0, 0, 0)); }) ==
        ErrorCode::kInvalidOrientation);
  const Quat unit(0.6, 0.8, 0, 0);
  CHECK(NormalizeOrientation(unit).coeffs() == unit.coeffs());
}

TEST_CASE("descriptor sets reject non-finite values") {
  DescriptorSet::Matrix m(1, 2);
  m << 1.0, std::nan("");
  CHECK(ErrorCodeOf([&] { DescriptorSet d(m); }) ==
        ErrorCode::kInvariantViolation);
  m << 1.0, 2.0;
  const DescriptorSet d(m);
  CHECK(d.rows() == 1);
  CHECK(d.dimension() == 2);
}

TEST_CASE("ground-truth track sorts and rejects duplicates") {
  GroundTruthSample a, b;
  a.timestamp = 5.0;
  b.timestamp = 1.0;
  const GroundTruthTrack gt({a, b});
  CHECK(gt.samples()[0].timestamp == 1.0);
  CHECK(gt.samples()[1].timestamp == 5.0);
  CHECK(ErrorCodeOf([&] { GroundTruthTrack bad({a, a}); }) ==
        ErrorCode::kDuplicateTimestamp);
}

TEST_CASE("distance matrix invariants") {
  CHECK_NOTHROW(SubmapDistanceMatrix(DistanceKind::kTime, 2, {0, 1, 1, 0}));
  CHECK(ErrorCodeOf([] {
          SubmapDistanceMatrix(DistanceKind::kTime, 2, {0, 1, 2, 0});
        }) == ErrorCode::kInvariantViolation);
  CHECK(ErrorCodeOf([] {
          SubmapDistanceMatrix(DistanceKind::kVpr, 2, {1, 1, 1, 0});
        }) == ErrorCode::kInvariantViolation);
  CHECK(ErrorCodeOf([] {
          SubmapDistanceMatrix(DistanceKind::kVpr, 2, {0, -1, -1, 0});
        }) == ErrorCode::kInvariantViolation);
  CHECK(ErrorCodeOf([] {
          const double inf = std::numeric_limits<double>::infinity();
          SubmapDistanceMatrix(DistanceKind::kVpr, 2, {0, inf, inf, 0});
        }) == ErrorCode::kInvariantViolation);
  CHECK(ErrorCodeOf([] {
          SubmapDistanceMatrix(DistanceKind::kVpr, 2, {0, 1, 1});
        }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("boolean matrix invariants") {
  CHECK_NOTHROW(AdjacencyMatrix(2, {1, 1, 1, 1}));
  CHECK(ErrorCodeOf([] { AdjacencyMatrix(2, {1, 1, 0, 1}); }) ==
        ErrorCode::kInvariantViolation);
  CHECK(ErrorCodeOf([] { AdjacencyMatrix(2, {0, 0, 0, 1}); }) ==
        ErrorCode::kInvariantViolation);
  const AdjacencyMatrix id = AdjacencyMatrix::Identity(3);
  CHECK(id.off_diagonal_count() == 0);
  // A chain 0-1-2 without the (0,2) entry is not transitively closed.
  CHECK(ErrorCodeOf([] {
          ReachabilityMatrix(3, {1, 1, 0, 1, 1, 1, 0, 1, 1});
        }) == ErrorCode::kInvariantViolation);
  CHECK_NOTHROW(ReachabilityMatrix(3, {1, 1, 0, 1, 1, 0, 0, 0, 1}));
}

TEST_CASE("weight vector") {
  const WeightVector w({2, 3});
  CHECK(w.total() == 5);
  CHECK(ErrorCodeOf([] { WeightVector bad({1, 0}); }) ==
        ErrorCode::kInvariantViolation);
}

TEST_CASE("merge rule presets") {
  const MergeRuleParams c1 = MergeRuleParams::Comb1();
  CHECK(c1.kind == RuleKind::kCombined);
  CHECK(c1.tau_time == 2.0);
  CHECK(c1.f_time == 10.0);
  CHECK(c1.f_vpr == 2.0);
  const MergeRuleParams c2 = MergeRuleParams::Comb2();
  CHECK(c2.tau_time == 0.5);
  CHECK(c2.f_time == 10.0);
  CHECK(c2.f_vpr == 4.0);
  MergeRuleParams bad = c1;
  bad.f_vpr = 0.5;
  CHECK(ErrorCodeOf([&] { bad.Validate(); }) == ErrorCode::kInvalidConfig);
  bad = c1;
  bad.tau_time = -1.0;
  CHECK(ErrorCodeOf([&] { bad.Validate(); }) == ErrorCode::kInvalidConfig);
}

TEST_CASE("curves are sorted by coverage") {
  const Curve c({{2.0, 0.5, 1.0, 0, 0}, {1.0, 1.0, 0.5, 0, 0}});
  CHECK(c.points()[0].coverage == 0.5);
  CHECK(c.points()[1].coverage == 1.0);
  CHECK(c.auc() == doctest::Approx(0.875));
  CHECK(ErrorCodeOf([] { Curve empty({}); }) == ErrorCode::kInvalidArgument);
}
