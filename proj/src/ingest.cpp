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

#include "smeval/ingest.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <iterator>
#include <string>
#include <utility>

#include "text_util.hpp"

namespace smeval {
namespace {

using detail::FormatDouble;
using detail::ParseDouble;
using detail::SplitFields;

double ParseFinite(std::string_view field, std::size_t line,
                   const char* what) {
  auto v = ParseDouble(field);
  if (!v) {
    throw ParseError(line, std::string("bad ") + what + " '" +
                               std::string(field) + "'");
  }
  if (!std::isfinite(*v)) {
    throw ParseError(line, std::string("non-finite ") + what);
  }
  return *v;
}

std::uint32_t ReadU32Le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void WriteU32Le(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff),
                     static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff),
                     static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

}  // namespace

Trajectory ParseTrajectory(std::istream& in) {
  std::vector<FrameRecord> frames;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::IsSkippableLine(line)) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 9) {
      throw ParseError(line_no, "expected 9 fields (timestamp submap_id tx ty "
                                "tz qw qx qy qz), got " +
                                    std::to_string(fields.size()));
    }
    FrameRecord f;
    f.timestamp = ParseFinite(fields[0], line_no, "timestamp");
    auto id = detail::ParseInt(fields[1]);
    if (!id) {
      throw ParseError(line_no, "submap id '" + std::string(fields[1]) +
                                    "' is not an integer");
    }
    f.submap_id = *id;
    f.position = Vec3(ParseFinite(fields[2], line_no, "tx"),
                      ParseFinite(fields[3], line_no, "ty"),
                      ParseFinite(fields[4], line_no, "tz"));
    f.orientation = Quat(ParseFinite(fields[5], line_no, "qw"),
                         ParseFinite(fields[6], line_no, "qx"),
                         ParseFinite(fields[7], line_no, "qy"),
                         ParseFinite(fields[8], line_no, "qz"));
    frames.push_back(std::move(f));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "failed reading trajectory");
  return Trajectory::Validate(std::move(frames));
}

DescriptorSet ParseDescriptors(std::istream& in) {
  std::array<unsigned char, 16> header{};
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() != static_cast<std::streamsize>(header.size())) {
    throw ParseError(0, "descriptor file truncated before end of header");
  }
  if (std::memcmp(header.data(), kDescriptorMagic, 4) != 0) {
    throw ParseError(0, "bad magic: descriptor files start with 'VPRD'");
  }
  const std::uint32_t version = ReadU32Le(header.data() + 4);
  if (version != kDescriptorVersion) {
    throw ParseError(0, "unsupported descriptor version " +
                            std::to_string(version));
  }
  const std::uint64_t rows = ReadU32Le(header.data() + 8);
  const std::uint64_t dim = ReadU32Le(header.data() + 12);
  if (rows > 0 && dim == 0) {
    throw ParseError(0, "descriptor dimension must be positive");
  }
  const std::uint64_t count = rows * dim;
  std::vector<unsigned char> payload(count * 4);
  in.read(reinterpret_cast<char*>(payload.data()),
          static_cast<std::streamsize>(payload.size()));
  if (static_cast<std::uint64_t>(in.gcount()) != payload.size()) {
    throw ParseError(0, "size mismatch: header declares " +
                            std::to_string(count) + " values, payload has " +
                            std::to_string(in.gcount() / 4));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw ParseError(0, "size mismatch: trailing bytes after payload");
  }

  DescriptorSet::Matrix data(static_cast<Eigen::Index>(rows),
                             static_cast<Eigen::Index>(dim));
  for (std::uint64_t k = 0; k < count; ++k) {
    const float v = std::bit_cast<float>(ReadU32Le(payload.data() + 4 * k));
    if (!std::isfinite(v)) {
      throw ParseError(0, "non-finite value at row " +
                              std::to_string(k / dim) + ", column " +
                              std::to_string(k % dim));
    }
    data(static_cast<Eigen::Index>(k / dim),
         static_cast<Eigen::Index>(k % dim)) = static_cast<double>(v);
  }
  return DescriptorSet(std::move(data));
}

GroundTruthTrack ParseGroundTruth(std::istream& in) {
  std::vector<GroundTruthSample> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::IsSkippableLine(line)) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 8) {
      throw ParseError(line_no, "expected 8 fields (timestamp tx ty tz qx qy "
                                "qz qw), got " +
                                    std::to_string(fields.size()));
    }
    GroundTruthSample s;
    s.timestamp = ParseFinite(fields[0], line_no, "timestamp");
    s.position = Vec3(ParseFinite(fields[1], line_no, "tx"),
                      ParseFinite(fields[2], line_no, "ty"),
                      ParseFinite(fields[3], line_no, "tz"));
    // TUM order: qx qy qz qw.
    s.orientation = Quat(ParseFinite(fields[7], line_no, "qw"),
                         ParseFinite(fields[4], line_no, "qx"),
                         ParseFinite(fields[5], line_no, "qy"),
                         ParseFinite(fields[6], line_no, "qz"));
    samples.push_back(std::move(s));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "failed reading ground truth");
  return GroundTruthTrack(std::move(samples));
}

void WriteTrajectory(std::ostream& out, const Trajectory& traj) {
  out << "# timestamp submap_id tx ty tz qw qx qy qz\n";
  for (const FrameRecord& f : traj.frames()) {
    out << FormatDouble(f.timestamp) << ' ' << f.submap_id << ' '
        << FormatDouble(f.position.x()) << ' ' << FormatDouble(f.position.y())
        << ' ' << FormatDouble(f.position.z()) << ' '
        << FormatDouble(f.orientation.w()) << ' '
        << FormatDouble(f.orientation.x()) << ' '
        << FormatDouble(f.orientation.y()) << ' '
        << FormatDouble(f.orientation.z()) << '\n';
  }
}

void WriteDescriptors(std::ostream& out, const DescriptorSet& descs) {
  out.write(kDescriptorMagic, 4);
  WriteU32Le(out, kDescriptorVersion);
  WriteU32Le(out, static_cast<std::uint32_t>(descs.rows()));
  WriteU32Le(out, static_cast<std::uint32_t>(descs.dimension()));
  const auto& m = descs.data();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      WriteU32Le(out, std::bit_cast<std::uint32_t>(static_cast<float>(m(r, c))));
    }
  }
}

void WriteGroundTruth(std::ostream& out, const GroundTruthTrack& gt) {
  out << "# timestamp tx ty tz qx qy qz qw\n";
  for (const GroundTruthSample& s : gt.samples()) {
    out << FormatDouble(s.timestamp) << ' ' << FormatDouble(s.position.x())
        << ' ' << FormatDouble(s.position.y()) << ' '
        << FormatDouble(s.position.z()) << ' '
        << FormatDouble(s.orientation.x()) << ' '
        << FormatDouble(s.orientation.y()) << ' '
        << FormatDouble(s.orientation.z()) << ' '
        << FormatDouble(s.orientation.w()) << '\n';
  }
}

Trajectory AttachDescriptors(const Trajectory& traj,
                             const DescriptorSet& descs) {
  if (descs.rows() != traj.frame_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "descriptor file has " + std::to_string(descs.rows()) +
                    " rows but the trajectory has " +
                    std::to_string(traj.frame_count()) + " frames");
  }
  std::vector<FrameRecord> frames(traj.frames().begin(), traj.frames().end());
  for (std::size_t k = 0; k < frames.size(); ++k) frames[k].descriptor_row = k;
  return Trajectory::Validate(std::move(frames));
}

AlignedTrajectory::AlignedTrajectory(Trajectory trajectory,
                                     std::vector<Vec3> gt_position,
                                     std::vector<Quat> gt_orientation,
                                     std::size_t dropped_frame_count)
    : trajectory_(std::move(trajectory)),
      gt_position_(std::move(gt_position)),
      gt_orientation_(std::move(gt_orientation)),
      dropped_frame_count_(dropped_frame_count) {
  if (gt_position_.size() != trajectory_.frame_count() ||
      gt_orientation_.size() != trajectory_.frame_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "aligned trajectory needs one ground-truth pose per frame");
  }
}

AlignedTrajectory AssociateGroundTruth(const Trajectory& traj,
                                       const GroundTruthTrack& gt,
                                       double max_dt) {
  if (!(max_dt > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "max_dt must be positive");
  }
  const auto samples = gt.samples();
  std::vector<FrameRecord> kept;
  std::vector<Vec3> positions;
  std::vector<Quat> orientations;
  std::vector<std::size_t> kept_per_submap(traj.submap_count(), 0);

  for (const FrameRecord& f : traj.frames()) {
    if (samples.empty()) break;
    auto it = std::lower_bound(
        samples.begin(), samples.end(), f.timestamp,
        [](const GroundTruthSample& s, double t) { return s.timestamp < t; });
    // Candidates: the first sample at or after t and the one before it.
    const GroundTruthSample* best = nullptr;
    double best_dt = 0.0;
    if (it != samples.begin()) {
      best = &*std::prev(it);
      best_dt = f.timestamp - best->timestamp;
    }
    if (it != samples.end()) {
      const double dt = it->timestamp - f.timestamp;
      if (best == nullptr || dt < best_dt) {
        best = &*it;
        best_dt = dt;
      }
    }
    if (best_dt > max_dt) continue;
    kept.push_back(f);
    positions.push_back(best->position);
    orientations.push_back(best->orientation);
    ++kept_per_submap[static_cast<std::size_t>(f.submap_id)];
  }

  if (kept.empty()) {
    throw Error(ErrorCode::kNoOverlap,
                "no frame has a ground-truth sample within max_dt");
  }
  for (std::size_t j = 0; j < kept_per_submap.size(); ++j) {
    if (kept_per_submap[j] == 0) {
      throw Error(ErrorCode::kEmptySubmapAfterAlignment,
                  "submap " + std::to_string(j) +
                      " has no frame with ground truth");
    }
  }
  const std::size_t dropped = traj.frame_count() - kept.size();
  return AlignedTrajectory(Trajectory::Validate(std::move(kept)),
                           std::move(positions), std::move(orientations),
                           dropped);
}

}  // namespace smeval
