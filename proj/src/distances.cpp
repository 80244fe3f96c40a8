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

#include "smeval/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace smeval {
namespace {

// Fixed summation order: every caller gets bit-identical results for the
// same pair of rows regardless of threading or blocking.
double Dot(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    s0 += a[k] * b[k];
    s1 += a[k + 1] * b[k + 1];
    s2 += a[k + 2] * b[k + 2];
    s3 += a[k + 3] * b[k + 3];
  }
  for (; k < n; ++k) s0 += a[k] * b[k];
  return (s0 + s1) + (s2 + s3);
}

double SquaredDiff(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const double d0 = a[k] - b[k];
    const double d1 = a[k + 1] - b[k + 1];
    const double d2 = a[k + 2] - b[k + 2];
    const double d3 = a[k + 3] - b[k + 3];
    s0 += d0 * d0;
    s1 += d1 * d1;
    s2 += d2 * d2;
    s3 += d3 * d3;
  }
  for (; k < n; ++k) {
    const double d = a[k] - b[k];
    s0 += d * d;
  }
  return (s0 + s1) + (s2 + s3);
}

// Per-row squared norms, computed with the same kernel as the cross terms so
// that a row compared with an identical copy of itself gives exactly 0.
class PairKernel {
 public:
  PairKernel(const DescriptorSet& descs, DescriptorMetric metric)
      : descs_(descs), metric_(metric) {
    if (metric_ != DescriptorMetric::kCosine) return;
    sq_norms_.resize(descs.rows());
    for (std::size_t i = 0; i < descs.rows(); ++i) {
      const double* r = Row(i);
      sq_norms_[i] = Dot(r, r, descs.dimension());
      if (!(sq_norms_[i] > 0.0)) {
        throw Error(ErrorCode::kZeroNormDescriptor,
                    "descriptor row " + std::to_string(i) +
                        " has zero norm; cosine distance is undefined");
      }
    }
  }

  // Callers pass a < b so that both orientations of a pair agree.
  double operator()(std::size_t a, std::size_t b) const {
    if (a == b) return 0.0;
    const std::size_t d = descs_.dimension();
    if (metric_ == DescriptorMetric::kEuclidean) {
      return std::sqrt(SquaredDiff(Row(a), Row(b), d));
    }
    const double cos_sim =
        Dot(Row(a), Row(b), d) / std::sqrt(sq_norms_[a] * sq_norms_[b]);
    return std::clamp(1.0 - cos_sim, 0.0, 2.0);
  }

 private:
  const double* Row(std::size_t i) const {
    return descs_.data().data() + i * descs_.dimension();
  }

  const DescriptorSet& descs_;
  DescriptorMetric metric_;
  std::vector<double> sq_norms_;
};

unsigned ResolveThreads(unsigned requested, std::size_t rows) {
  unsigned t = requested == 0 ? std::thread::hardware_concurrency() : requested;
  if (t == 0) t = 1;
  return static_cast<unsigned>(
      std::min<std::size_t>(t, std::max<std::size_t>(rows, 1)));
}

std::vector<std::int64_t> SubmapOfRow(const Trajectory& traj,
                                      std::size_t row_count) {
  std::vector<std::int64_t> submap_of_row(row_count, -1);
  for (std::size_t i = 0; i < traj.frame_count(); ++i) {
    const FrameRecord& f = traj.frame(i);
    if (!f.descriptor_row) {
      throw Error(ErrorCode::kMissingDescriptor,
                  "frame " + std::to_string(i) + " has no descriptor");
    }
    if (*f.descriptor_row >= row_count) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "frame " + std::to_string(i) + " references descriptor row " +
                      std::to_string(*f.descriptor_row) + " of " +
                      std::to_string(row_count));
    }
    submap_of_row[*f.descriptor_row] = f.submap_id;
  }
  return submap_of_row;
}

SubmapDistanceMatrix FinishSubmapMatrix(std::size_t m,
                                        std::vector<double> best) {
  for (std::size_t i = 0; i < m; ++i) {
    best[i * m + i] = 0.0;
    for (std::size_t j = i + 1; j < m; ++j) {
      const double v = std::min(best[i * m + j], best[j * m + i]);
      best[i * m + j] = v;
      best[j * m + i] = v;
    }
  }
  return SubmapDistanceMatrix(DistanceKind::kVpr, m, std::move(best));
}

}  // namespace

std::string_view DescriptorMetricName(DescriptorMetric metric) {
  return metric == DescriptorMetric::kCosine ? "cosine" : "euclidean";
}

SubmapDistanceMatrix TemporalSubmapDistances(const Trajectory& traj) {
  const std::size_t m = traj.submap_count();
  std::vector<double> first(m), last(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto members = traj.submap_frames(j);
    first[j] = traj.frame(members.front()).timestamp;
    last[j] = traj.frame(members.back()).timestamp;
  }
  std::vector<double> values(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double gap = std::max({0.0, first[j] - last[i], first[i] - last[j]});
      values[i * m + j] = gap;
      values[j * m + i] = gap;
    }
  }
  return SubmapDistanceMatrix(DistanceKind::kTime, m, std::move(values));
}

double DescriptorDistance(const DescriptorSet& descs, std::size_t a,
                          std::size_t b, DescriptorMetric metric) {
  if (a >= descs.rows() || b >= descs.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "descriptor row out of range");
  }
  PairKernel kernel(descs, metric);
  return kernel(std::min(a, b), std::max(a, b));
}

FrameDistanceMatrix FrameDescriptorDistances(const DescriptorSet& descs,
                                             DescriptorMetric metric,
                                             unsigned threads) {
  const std::size_t n = descs.rows();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "descriptor set is empty");
  }
  const PairKernel kernel(descs, metric);
  std::vector<double> values(n * n, 0.0);

  // Worker w owns rows w, w + T, w + 2T, ... of the upper triangle.
  const unsigned worker_count = ResolveThreads(threads, n);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += worker_count) {
      for (std::size_t j = i + 1; j < n; ++j) values[i * n + j] = kernel(i, j);
    }
  };
  if (worker_count == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) pool.emplace_back(work, w);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values[j * n + i] = values[i * n + j];
  }
  return FrameDistanceMatrix(n, std::move(values));
}

SubmapDistanceMatrix AggregateToSubmaps(const FrameDistanceMatrix& fdm,
                                        const Trajectory& traj) {
  const std::size_t m = traj.submap_count();
  const auto submap_of_row = SubmapOfRow(traj, fdm.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(m * m, inf);
  const std::size_t n = fdm.size();
  for (std::size_t a = 0; a < n; ++a) {
    const std::int64_t sa = submap_of_row[a];
    if (sa < 0) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::int64_t sb = submap_of_row[b];
      if (sb < 0 || sb == sa) continue;
      double& slot = best[static_cast<std::size_t>(sa) * m +
                          static_cast<std::size_t>(sb)];
      slot = std::min(slot, fdm.at(a, b));
    }
  }
  return FinishSubmapMatrix(m, std::move(best));
}

SubmapDistanceMatrix StreamingSubmapDistances(const DescriptorSet& descs,
                                              const Trajectory& traj,
                                              DescriptorMetric metric) {
  const std::size_t n = descs.rows();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "descriptor set is empty");
  }
  const std::size_t m = traj.submap_count();
  const auto submap_of_row = SubmapOfRow(traj, n);
  const PairKernel kernel(descs, metric);
  std::vector<double> best(m * m, std::numeric_limits<double>::infinity());
  for (std::size_t a = 0; a < n; ++a) {
    const std::int64_t sa = submap_of_row[a];
    if (sa < 0) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::int64_t sb = submap_of_row[b];
      if (sb < 0 || sb == sa) continue;
      double& slot = best[static_cast<std::size_t>(sa) * m +
                          static_cast<std::size_t>(sb)];
      slot = std::min(slot, kernel(a, b));
    }
  }
  return FinishSubmapMatrix(m, std::move(best));
}

}  // namespace smeval
