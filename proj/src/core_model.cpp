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

#include "smeval/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>

#include "smeval/reachability.hpp"

namespace smeval {

const char* ErrorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyTrajectory: return "EmptyTrajectory";
    case ErrorCode::kNonMonotonicTimestamps: return "NonMonotonicTimestamps";
    case ErrorCode::kInvalidOrientation: return "InvalidOrientation";
    case ErrorCode::kDuplicateTimestamp: return "DuplicateTimestamp";
    case ErrorCode::kEmptySubmapAfterAlignment:
      return "EmptySubmapAfterAlignment";
    case ErrorCode::kNoOverlap: return "NoOverlap";
    case ErrorCode::kZeroNormDescriptor: return "ZeroNormDescriptor";
    case ErrorCode::kMissingDescriptor: return "MissingDescriptor";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDegenerateEvaluation: return "DegenerateEvaluation";
    case ErrorCode::kNoGroundTruthMatches: return "NoGroundTruthMatches";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Quat NormalizeOrientation(const Quat& q) {
  const double norm = q.norm();
  if (!std::isfinite(norm) ||
      std::abs(norm - 1.0) > kQuaternionIngestTolerance) {
    throw Error(ErrorCode::kInvalidOrientation,
                "quaternion norm " + std::to_string(norm) +
                    " is not within 1e-3 of unit");
  }
  // Leave already-unit quaternions untouched so re-validation is a no-op.
  if (std::abs(norm - 1.0) <= 1e-12) return q;
  return Quat(q.coeffs() / norm);
}

Trajectory Trajectory::Validate(std::vector<FrameRecord> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::kEmptyTrajectory, "trajectory has no frames");
  }
  Trajectory traj;
  std::unordered_map<std::int64_t, std::int64_t> remap;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    FrameRecord& f = raw[i];
    if (!std::isfinite(f.timestamp)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "frame " + std::to_string(i) + " has a non-finite timestamp");
    }
    if (i > 0 && f.timestamp < raw[i - 1].timestamp - kTimestampTolerance) {
      throw Error(ErrorCode::kNonMonotonicTimestamps,
                  "timestamp of frame " + std::to_string(i) +
                      " decreases from the previous frame");
    }
    if (!f.position.allFinite()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "frame " + std::to_string(i) + " has a non-finite position");
    }
    f.orientation = NormalizeOrientation(f.orientation);
    auto [it, inserted] = remap.try_emplace(
        f.submap_id, static_cast<std::int64_t>(traj.members_.size()));
    if (inserted) traj.members_.emplace_back();
    f.submap_id = it->second;
    traj.members_[static_cast<std::size_t>(it->second)].push_back(i);
  }
  traj.frames_ = std::move(raw);
  return traj;
}

bool Trajectory::operator==(const Trajectory& other) const {
  if (frames_.size() != other.frames_.size()) return false;
  for (std::size_t i = 0; i < frames_.size(); ++i) {
    const FrameRecord& a = frames_[i];
    const FrameRecord& b = other.frames_[i];
    if (a.timestamp != b.timestamp || a.submap_id != b.submap_id ||
        a.position != b.position ||
        a.orientation.coeffs() != b.orientation.coeffs() ||
        a.descriptor_row != b.descriptor_row) {
      return false;
    }
  }
  return true;
}

DescriptorSet::DescriptorSet(Matrix data) : data_(std::move(data)) {
  if (!data_.allFinite()) {
    throw Error(ErrorCode::kInvariantViolation,
                "descriptor matrix contains non-finite values");
  }
}

GroundTruthTrack::GroundTruthTrack(std::vector<GroundTruthSample> samples)
    : samples_(std::move(samples)) {
  std::stable_sort(samples_.begin(), samples_.end(),
                   [](const GroundTruthSample& a, const GroundTruthSample& b) {
                     return a.timestamp < b.timestamp;
                   });
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].timestamp) ||
        !samples_[i].position.allFinite()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ground-truth sample has non-finite values");
    }
    if (i > 0 && samples_[i].timestamp == samples_[i - 1].timestamp) {
      throw Error(ErrorCode::kDuplicateTimestamp,
                  "duplicate ground-truth timestamp " +
                      std::to_string(samples_[i].timestamp));
    }
    samples_[i].orientation = NormalizeOrientation(samples_[i].orientation);
  }
}

std::string_view DistanceKindName(DistanceKind kind) {
  return kind == DistanceKind::kTime ? "time" : "vpr";
}

std::string_view RuleKindName(RuleKind kind) {
  switch (kind) {
    case RuleKind::kTime: return "time";
    case RuleKind::kVpr: return "vpr";
    case RuleKind::kCombined: return "combined";
  }
  return "unknown";
}

SymmetricDistances::SymmetricDistances(std::size_t size,
                                       std::vector<double> values)
    : size_(size), values_(std::move(values)) {
  if (values_.size() != size_ * size_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distance matrix needs " + std::to_string(size_ * size_) +
                    " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (values_[i * size_ + i] != 0.0) {
      throw Error(ErrorCode::kInvariantViolation,
                  "distance matrix diagonal must be zero");
    }
    for (std::size_t j = i + 1; j < size_; ++j) {
      const double v = values_[i * size_ + j];
      if (!std::isfinite(v) || v < 0.0) {
        throw Error(ErrorCode::kInvariantViolation,
                    "distance matrix entries must be finite and >= 0");
      }
      if (v != values_[j * size_ + i]) {
        throw Error(ErrorCode::kInvariantViolation,
                    "distance matrix must be symmetric");
      }
    }
  }
}

SubmapDistanceMatrix::SubmapDistanceMatrix(DistanceKind kind, std::size_t m,
                                           std::vector<double> values)
    : SymmetricDistances(m, std::move(values)), kind_(kind) {}

FrameDistanceMatrix::FrameDistanceMatrix(std::size_t n,
                                         std::vector<double> values)
    : SymmetricDistances(n, std::move(values)) {}

BoolMatrix::BoolMatrix(std::size_t size, std::vector<std::uint8_t> values)
    : size_(size), values_(std::move(values)) {
  if (values_.size() != size_ * size_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "boolean matrix needs " + std::to_string(size_ * size_) +
                    " values, got " + std::to_string(values_.size()));
  }
  for (auto& v : values_) v = v != 0 ? 1 : 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (!values_[i * size_ + i]) {
      throw Error(ErrorCode::kInvariantViolation,
                  "boolean matrix diagonal must be true");
    }
    for (std::size_t j = i + 1; j < size_; ++j) {
      if (values_[i * size_ + j] != values_[j * size_ + i]) {
        throw Error(ErrorCode::kInvariantViolation,
                    "boolean matrix must be symmetric");
      }
    }
  }
}

std::size_t BoolMatrix::off_diagonal_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (i != j && values_[i * size_ + j]) ++n;
    }
  }
  return n;
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t m,
                                 std::vector<std::uint8_t> values)
    : BoolMatrix(m, std::move(values)) {}

AdjacencyMatrix AdjacencyMatrix::Identity(std::size_t m) {
  std::vector<std::uint8_t> v(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) v[i * m + i] = 1;
  return AdjacencyMatrix(m, std::move(v));
}

ReachabilityMatrix::ReachabilityMatrix(std::size_t m,
                                       std::vector<std::uint8_t> values)
    : BoolMatrix(m, std::move(values)) {
  // Closed iff every reachable pair has identical rows.
  const auto v = this->values();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!v[i * m + j]) continue;
      if (!std::equal(v.begin() + static_cast<std::ptrdiff_t>(i * m),
                      v.begin() + static_cast<std::ptrdiff_t>((i + 1) * m),
                      v.begin() + static_cast<std::ptrdiff_t>(j * m))) {
        throw Error(ErrorCode::kInvariantViolation,
                    "reachability matrix is not transitively closed");
      }
    }
  }
}

WeightVector::WeightVector(std::vector<std::uint64_t> weights)
    : weights_(std::move(weights)) {
  for (const auto w : weights_) {
    if (w == 0) {
      throw Error(ErrorCode::kInvariantViolation,
                  "every submap weight must be at least 1");
    }
    total_ += w;
  }
}

void MergeRuleParams::Validate() const {
  if (!std::isfinite(tau_time) || tau_time < 0.0) {
    throw Error(ErrorCode::kInvalidConfig, "tau_time must be >= 0");
  }
  if (kind == RuleKind::kCombined &&
      (!(f_time >= 1.0) || !(f_vpr >= 1.0) || !std::isfinite(f_time) ||
       !std::isfinite(f_vpr))) {
    throw Error(ErrorCode::kInvalidConfig,
                "relaxation factors f_time and f_vpr must be >= 1");
  }
}

Curve::Curve(std::vector<CurvePoint> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "curve needs at least one point");
  }
  std::stable_sort(points_.begin(), points_.end(),
                   [](const CurvePoint& a, const CurvePoint& b) {
                     return a.coverage < b.coverage;
                   });
  auc_ = Auc(points_);
}

}  // namespace smeval
