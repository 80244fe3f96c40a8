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

#ifndef SMEVAL_CORE_MODEL_HPP_
#define SMEVAL_CORE_MODEL_HPP_

/**
 * @file core_model.hpp
 * @brief Domain types shared by the whole evaluation pipeline.
 *
 * A multimap SLAM run is a Trajectory: timestamped poses, each localized in
 * one submap. Submap distance matrices (temporal or visual) are thresholded
 * into adjacency matrices, closed into reachability matrices and scored with
 * frame-count weights. Every type here validates its invariants on
 * construction and is immutable afterwards, so instances can be shared
 * freely across threads.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "smeval/error.hpp"

namespace smeval {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;

/// Tolerance for treating two timestamps as equal (sensor logs repeat them).
inline constexpr double kTimestampTolerance = 1e-9;
/// Quaternions farther than this from unit norm are rejected as corrupt.
inline constexpr double kQuaternionIngestTolerance = 1e-3;

/// One frame of a multimap SLAM trajectory. The pose is expressed relative
/// to the submap the frame is localized in.
struct FrameRecord {
  double timestamp = 0.0;  ///< seconds
  Vec3 position = Vec3::Zero();  ///< meters, submap frame
  Quat orientation = Quat::Identity();
  std::int64_t submap_id = 0;
  std::optional<std::size_t> descriptor_row;
};

/// Normalizes `q` if it is within kQuaternionIngestTolerance of unit norm.
/// Quaternions already unit to round-off are returned bit-for-bit.
/// Throws Error(kInvalidOrientation) otherwise.
Quat NormalizeOrientation(const Quat& q);

/// An ordered, validated list of frames with contiguous 0-based submap ids.
class Trajectory {
 public:
  /// Validates raw frames and re-indexes submap ids to 0..M-1 in order of
  /// first appearance. Idempotent.
  ///
  /// Throws Error(kEmptyTrajectory), Error(kNonMonotonicTimestamps) when a
  /// timestamp decreases by more than kTimestampTolerance, or
  /// Error(kInvalidOrientation).
  static Trajectory Validate(std::vector<FrameRecord> raw);

  std::span<const FrameRecord> frames() const { return frames_; }
  const FrameRecord& frame(std::size_t i) const { return frames_.at(i); }
  std::size_t frame_count() const { return frames_.size(); }
  std::size_t submap_count() const { return members_.size(); }

  /// Frame indices of submap `j`, in trajectory order.
  std::span<const std::size_t> submap_frames(std::size_t j) const {
    return members_.at(j);
  }

  bool operator==(const Trajectory& other) const;

 private:
  Trajectory() = default;

  std::vector<FrameRecord> frames_;
  std::vector<std::vector<std::size_t>> members_;
};

/// Row-major matrix of holistic image descriptors, one row per frame.
class DescriptorSet {
 public:
  using Matrix =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  /// Throws Error(kInvariantViolation) on non-finite entries.
  explicit DescriptorSet(Matrix data);

  std::size_t rows() const { return static_cast<std::size_t>(data_.rows()); }
  std::size_t dimension() const {
    return static_cast<std::size_t>(data_.cols());
  }
  const Matrix& data() const { return data_; }
  auto row(std::size_t i) const { return data_.row(static_cast<Eigen::Index>(i)); }

 private:
  Matrix data_;
};

struct GroundTruthSample {
  double timestamp = 0.0;
  Vec3 position = Vec3::Zero();
  Quat orientation = Quat::Identity();
};

/// Ground-truth poses sorted by strictly increasing timestamp.
class GroundTruthTrack {
 public:
  /// Sorts the samples by timestamp and normalizes orientations.
  /// Throws Error(kDuplicateTimestamp) if two samples share a timestamp.
  explicit GroundTruthTrack(std::vector<GroundTruthSample> samples);

  std::span<const GroundTruthSample> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::vector<GroundTruthSample> samples_;
};

enum class DistanceKind { kTime, kVpr };

std::string_view DistanceKindName(DistanceKind kind);

/// Dense symmetric matrix with zero diagonal and finite, non-negative entries.
class SymmetricDistances {
 public:
  std::size_t size() const { return size_; }
  double at(std::size_t i, std::size_t j) const {
    return values_[i * size_ + j];
  }
  std::span<const double> values() const { return values_; }

 protected:
  SymmetricDistances(std::size_t size, std::vector<double> values);

 private:
  std::size_t size_;
  std::vector<double> values_;
};

/// M x M distances between submaps: S_time in seconds or S_vpr in descriptor
/// units.
class SubmapDistanceMatrix : public SymmetricDistances {
 public:
  /// `values` is row-major M*M. Throws Error(kInvariantViolation) unless the
  /// matrix is exactly symmetric with zero diagonal and finite entries >= 0.
  SubmapDistanceMatrix(DistanceKind kind, std::size_t m,
                       std::vector<double> values);

  DistanceKind kind() const { return kind_; }

 private:
  DistanceKind kind_;
};

/// N_d x N_d descriptor distances between frames.
class FrameDistanceMatrix : public SymmetricDistances {
 public:
  FrameDistanceMatrix(std::size_t n, std::vector<double> values);
};

/// Symmetric boolean M x M matrix with a true diagonal.
class BoolMatrix {
 public:
  std::size_t size() const { return size_; }
  bool at(std::size_t i, std::size_t j) const {
    return values_[i * size_ + j] != 0;
  }
  std::span<const std::uint8_t> values() const { return values_; }
  /// Number of true off-diagonal entries (each unordered pair counts twice).
  std::size_t off_diagonal_count() const;

  bool operator==(const BoolMatrix& other) const = default;

 protected:
  BoolMatrix(std::size_t size, std::vector<std::uint8_t> values);

 private:
  std::size_t size_;
  std::vector<std::uint8_t> values_;
};

/// Direct submap adjacency A (or A_gt). Without any merging A is the
/// identity pattern.
class AdjacencyMatrix : public BoolMatrix {
 public:
  AdjacencyMatrix(std::size_t m, std::vector<std::uint8_t> values);

  static AdjacencyMatrix Identity(std::size_t m);
};

/// Reachability R (or R_gt): an adjacency matrix that is also transitively
/// closed, i.e. the indicator of "same connected component".
class ReachabilityMatrix : public BoolMatrix {
 public:
  ReachabilityMatrix(std::size_t m, std::vector<std::uint8_t> values);
};

/// Frames per submap. W = w w^T is never stored.
class WeightVector {
 public:
  /// Throws Error(kInvariantViolation) if any weight is zero.
  explicit WeightVector(std::vector<std::uint64_t> weights);

  std::size_t size() const { return weights_.size(); }
  std::uint64_t operator[](std::size_t j) const { return weights_[j]; }
  std::span<const std::uint64_t> values() const { return weights_; }
  std::uint64_t total() const { return total_; }

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 0;
};

enum class RuleKind { kTime, kVpr, kCombined };

std::string_view RuleKindName(RuleKind kind);

/// Parameters of a merge rule. For the combined rule two submaps are
/// adjacent if S_vpr <= tau_vpr, or S_time <= tau_time, or both
/// S_time <= f_time * tau_time and S_vpr <= f_vpr * tau_vpr. The swept
/// threshold (tau or tau_vpr) is not part of the parameters.
struct MergeRuleParams {
  RuleKind kind = RuleKind::kVpr;
  double tau_time = 0.0;  ///< seconds
  double f_time = 1.0;
  double f_vpr = 1.0;

  /// Throws Error(kInvalidConfig) on negative tau_time or factors below 1.
  void Validate() const;

  static MergeRuleParams Time() { return {RuleKind::kTime, 0.0, 1.0, 1.0}; }
  static MergeRuleParams Vpr() { return {RuleKind::kVpr, 0.0, 1.0, 1.0}; }
  static MergeRuleParams Comb1() {
    return {RuleKind::kCombined, 2.0, 10.0, 2.0};
  }
  static MergeRuleParams Comb2() {
    return {RuleKind::kCombined, 0.5, 10.0, 4.0};
  }
};

struct CurvePoint {
  double threshold = 0.0;
  double precision = 1.0;
  double coverage = 0.0;
  double weighted_tp = 0.0;
  double weighted_fp = 0.0;
};

/// Precision-coverage curve sorted by coverage, with its area.
class Curve {
 public:
  /// Sorts `points` by coverage (stable, so threshold order breaks ties)
  /// and integrates the area. Throws Error(kInvalidArgument) when empty.
  explicit Curve(std::vector<CurvePoint> points);

  std::span<const CurvePoint> points() const { return points_; }
  double auc() const { return auc_; }

 private:
  std::vector<CurvePoint> points_;
  double auc_ = 0.0;
};

}  // namespace smeval

#endif  // SMEVAL_CORE_MODEL_HPP_
