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

#ifndef SMEVAL_INGEST_HPP_
#define SMEVAL_INGEST_HPP_

// Readers and writers for the three input formats, plus association of SLAM
// frames with ground-truth poses.
//
//   Submap trajectory (text):  timestamp submap_id tx ty tz qw qx qy qz
//   Ground truth (TUM text):   timestamp tx ty tz qx qy qz qw
//   Descriptors (binary, LE):  "VPRD" u32 version=1, u32 rows, u32 dim,
//                              rows*dim float32, row-major
//
// Note the quaternion order differs between the two text formats: the
// trajectory format is qw-first, TUM is qw-last.

#include <cstddef>
#include <istream>
#include <ostream>
#include <vector>

#include "smeval/core_model.hpp"

namespace smeval {

inline constexpr double kDefaultMaxDt = 0.1;
inline constexpr char kDescriptorMagic[4] = {'V', 'P', 'R', 'D'};
inline constexpr std::uint32_t kDescriptorVersion = 1;

/// Lines starting with '#' and blank lines are skipped.
Trajectory ParseTrajectory(std::istream& in);
DescriptorSet ParseDescriptors(std::istream& in);
GroundTruthTrack ParseGroundTruth(std::istream& in);

/// Writes shortest round-trip decimal representations, so parsing the output
/// reproduces the trajectory bit for bit.
void WriteTrajectory(std::ostream& out, const Trajectory& traj);
/// Values are stored as float32.
void WriteDescriptors(std::ostream& out, const DescriptorSet& descs);
void WriteGroundTruth(std::ostream& out, const GroundTruthTrack& gt);

/// Binds the k-th descriptor row to the k-th frame. Throws
/// Error(kDimensionMismatch) unless the row count equals the frame count.
Trajectory AttachDescriptors(const Trajectory& traj, const DescriptorSet& descs);

/// A trajectory restricted to frames with a ground-truth pose.
class AlignedTrajectory {
 public:
  AlignedTrajectory(Trajectory trajectory, std::vector<Vec3> gt_position,
                    std::vector<Quat> gt_orientation,
                    std::size_t dropped_frame_count);

  const Trajectory& trajectory() const { return trajectory_; }
  const Vec3& gt_position(std::size_t frame) const {
    return gt_position_.at(frame);
  }
  const Quat& gt_orientation(std::size_t frame) const {
    return gt_orientation_.at(frame);
  }
  std::size_t dropped_frame_count() const { return dropped_frame_count_; }

 private:
  Trajectory trajectory_;
  std::vector<Vec3> gt_position_;
  std::vector<Quat> gt_orientation_;
  std::size_t dropped_frame_count_;
};

/// Pairs every frame with the ground-truth sample nearest in time (ties go
/// to the earlier sample). Frames farther than `max_dt` from any sample are
/// dropped; frame order is preserved.
///
/// Throws Error(kNoOverlap) if every frame is dropped and
/// Error(kEmptySubmapAfterAlignment) if a submap loses all its frames.
AlignedTrajectory AssociateGroundTruth(const Trajectory& traj,
                                       const GroundTruthTrack& gt,
                                       double max_dt = kDefaultMaxDt);

}  // namespace smeval

#endif  // SMEVAL_INGEST_HPP_
