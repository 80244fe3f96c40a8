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

#include "smeval/smeval.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "smeval/core_model.hpp"
#include "smeval/distances.hpp"
#include "smeval/ingest.hpp"
#include "smeval/merge_rules.hpp"
#include "smeval/reachability.hpp"
#include "smeval/report.hpp"
#include "smeval/synthesis.hpp"

struct smeval_trajectory {
  smeval::Trajectory value;
};
struct smeval_descriptors {
  smeval::DescriptorSet value;
};
struct smeval_ground_truth {
  smeval::GroundTruthTrack value;
};
struct smeval_aligned {
  smeval::AlignedTrajectory value;
};
struct smeval_distances {
  smeval::SubmapDistanceMatrix value;
};
struct smeval_frame_distances {
  smeval::FrameDistanceMatrix value;
};
struct smeval_adjacency {
  smeval::AdjacencyMatrix value;
  std::optional<smeval::ReachabilityMatrix> closed;
};
struct smeval_curve {
  smeval::Curve value;
};
struct smeval_frame_pr {
  std::vector<smeval::FramePrPoint> value;
};
struct smeval_world {
  smeval::World value;
  smeval::WorldConfig config;
};

namespace {

using namespace smeval;

thread_local std::string g_last_error;

smeval_status ToStatus(ErrorCode code) {
  // ErrorCode values mirror the C enum one to one.
  return static_cast<smeval_status>(static_cast<int>(code));
}

smeval_status Fail(smeval_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
smeval_status Guard(F&& body) {
  try {
    body();
    return SMEVAL_OK;
  } catch (const Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SMEVAL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SMEVAL_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(SMEVAL_ERR_INTERNAL, "unknown error");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

std::ifstream OpenInput(const char* path, std::ios::openmode mode) {
  Require(path != nullptr, "path is null");
  std::ifstream in(path, mode);
  if (!in) {
    throw Error(ErrorCode::kIoError, std::string("cannot open ") + path);
  }
  return in;
}

MergeRuleParams FromC(const smeval_rule_params& p) {
  MergeRuleParams out;
  switch (p.kind) {
    case SMEVAL_RULE_TIME: out.kind = RuleKind::kTime; break;
    case SMEVAL_RULE_VPR: out.kind = RuleKind::kVpr; break;
    case SMEVAL_RULE_COMBINED: out.kind = RuleKind::kCombined; break;
    default: throw Error(ErrorCode::kInvalidArgument, "unknown rule kind");
  }
  out.tau_time = p.tau_time;
  out.f_time = p.f_time;
  out.f_vpr = p.f_vpr;
  return out;
}

smeval_rule_params ToC(const MergeRuleParams& p) {
  smeval_rule_params out{};
  out.kind = p.kind == RuleKind::kTime  ? SMEVAL_RULE_TIME
             : p.kind == RuleKind::kVpr ? SMEVAL_RULE_VPR
                                        : SMEVAL_RULE_COMBINED;
  out.tau_time = p.tau_time;
  out.f_time = p.f_time;
  out.f_vpr = p.f_vpr;
  return out;
}

DescriptorMetric FromC(smeval_metric m) {
  switch (m) {
    case SMEVAL_METRIC_COSINE: return DescriptorMetric::kCosine;
    case SMEVAL_METRIC_EUCLIDEAN: return DescriptorMetric::kEuclidean;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown descriptor metric");
}

WorldConfig FromC(const smeval_world_config& c) {
  WorldConfig w;
  w.num_places = c.num_places;
  w.num_submaps = c.num_submaps;
  w.frames_per_submap_min = c.frames_per_submap_min;
  w.frames_per_submap_max = c.frames_per_submap_max;
  w.revisit_probability = c.revisit_probability;
  w.descriptor_dim = c.descriptor_dim;
  w.descriptor_noise_sigma = c.descriptor_noise_sigma;
  w.dropout_gap_min = c.dropout_gap_min;
  w.dropout_gap_max = c.dropout_gap_max;
  w.frame_period = c.frame_period;
  w.rng_seed = c.rng_seed;
  return w;
}

const ReachabilityMatrix& Closed(const smeval_adjacency* a,
                                 std::optional<ReachabilityMatrix>& scratch) {
  if (a->closed) return *a->closed;
  // Throws kInvariantViolation if the matrix is not transitively closed.
  scratch.emplace(a->value.size(),
                  std::vector<std::uint8_t>(a->value.values().begin(),
                                            a->value.values().end()));
  return *scratch;
}

std::vector<RuleSummary> Summaries(const smeval_rule_summary* rules,
                                   std::size_t count) {
  Require(rules != nullptr || count == 0, "rules is null");
  std::vector<RuleSummary> out;
  for (std::size_t k = 0; k < count; ++k) {
    Require(rules[k].rule != nullptr && rules[k].curve != nullptr,
            "rule summary needs a name and a curve");
    out.push_back({rules[k].rule, FromC(rules[k].params),
                   rules[k].curve->value.auc(),
                   rules[k].curve->value.points().size()});
  }
  return out;
}

}  // namespace

extern "C" {

const char* smeval_version(void) { return "1.0.0"; }

const char* smeval_status_name(smeval_status status) {
  if (status == SMEVAL_OK) return "Ok";
  if (status == SMEVAL_ERR_INTERNAL) return "Internal";
  return ErrorCodeName(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* smeval_last_error(void) { return g_last_error.c_str(); }

void smeval_string_free(char* s) { std::free(s); }

// ---- Trajectories ---------------------------------------------------------

smeval_status smeval_trajectory_parse(const char* text, size_t len,
                                      smeval_trajectory** out) {
  return Guard([&] {
    Require(out != nullptr && (text != nullptr || len == 0), "null argument");
    std::istringstream in(std::string(text == nullptr ? "" : text, len));
    *out = new smeval_trajectory{ParseTrajectory(in)};
  });
}

smeval_status smeval_trajectory_read_file(const char* path,
                                          smeval_trajectory** out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    auto in = OpenInput(path, std::ios::in);
    *out = new smeval_trajectory{ParseTrajectory(in)};
  });
}

smeval_status smeval_trajectory_from_frames(const smeval_frame* frames,
                                            size_t count,
                                            smeval_trajectory** out) {
  return Guard([&] {
    Require(out != nullptr && (frames != nullptr || count == 0),
            "null argument");
    std::vector<FrameRecord> raw(count);
    for (std::size_t i = 0; i < count; ++i) {
      const smeval_frame& f = frames[i];
      raw[i].timestamp = f.timestamp;
      raw[i].position = Vec3(f.position[0], f.position[1], f.position[2]);
      raw[i].orientation = Quat(f.orientation[0], f.orientation[1],
                                f.orientation[2], f.orientation[3]);
      raw[i].submap_id = f.submap_id;
      if (f.descriptor_row >= 0) {
        raw[i].descriptor_row = static_cast<std::size_t>(f.descriptor_row);
      }
    }
    *out = new smeval_trajectory{Trajectory::Validate(std::move(raw))};
  });
}

smeval_status smeval_trajectory_to_text(const smeval_trajectory* t,
                                        char** out) {
  return Guard([&] {
    Require(t != nullptr && out != nullptr, "null argument");
    std::ostringstream os;
    WriteTrajectory(os, t->value);
    *out = CopyString(os.str());
  });
}

size_t smeval_trajectory_frame_count(const smeval_trajectory* t) {
  return t == nullptr ? 0 : t->value.frame_count();
}

size_t smeval_trajectory_submap_count(const smeval_trajectory* t) {
  return t == nullptr ? 0 : t->value.submap_count();
}

smeval_status smeval_trajectory_frame(const smeval_trajectory* t, size_t index,
                                      smeval_frame* out) {
  return Guard([&] {
    Require(t != nullptr && out != nullptr, "null argument");
    Require(index < t->value.frame_count(), "frame index out of range");
    const FrameRecord& f = t->value.frame(index);
    smeval_frame r{};
    r.timestamp = f.timestamp;
    for (int k = 0; k < 3; ++k) r.position[k] = f.position[k];
    r.orientation[0] = f.orientation.w();
    r.orientation[1] = f.orientation.x();
    r.orientation[2] = f.orientation.y();
    r.orientation[3] = f.orientation.z();
    r.submap_id = f.submap_id;
    r.descriptor_row =
        f.descriptor_row ? static_cast<int64_t>(*f.descriptor_row) : -1;
    *out = r;
  });
}

smeval_status smeval_trajectory_weights(const smeval_trajectory* t,
                                        uint64_t* weights) {
  return Guard([&] {
    Require(t != nullptr && weights != nullptr, "null argument");
    const WeightVector w = ComputeWeightVector(t->value);
    for (std::size_t j = 0; j < w.size(); ++j) weights[j] = w[j];
  });
}

smeval_status smeval_trajectory_attach_descriptors(const smeval_trajectory* t,
                                                   const smeval_descriptors* d,
                                                   smeval_trajectory** out) {
  return Guard([&] {
    Require(t != nullptr && d != nullptr && out != nullptr, "null argument");
    *out = new smeval_trajectory{AttachDescriptors(t->value, d->value)};
  });
}

void smeval_trajectory_free(smeval_trajectory* t) { delete t; }

// ---- Descriptors ----------------------------------------------------------

smeval_status smeval_descriptors_parse(const void* bytes, size_t len,
                                       smeval_descriptors** out) {
  return Guard([&] {
    Require(out != nullptr && (bytes != nullptr || len == 0), "null argument");
    std::istringstream in(
        std::string(static_cast<const char*>(bytes), bytes == nullptr ? 0 : len),
        std::ios::in | std::ios::binary);
    *out = new smeval_descriptors{ParseDescriptors(in)};
  });
}

smeval_status smeval_descriptors_read_file(const char* path,
                                           smeval_descriptors** out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    auto in = OpenInput(path, std::ios::in | std::ios::binary);
    *out = new smeval_descriptors{ParseDescriptors(in)};
  });
}

smeval_status smeval_descriptors_create(const double* data, size_t rows,
                                        size_t dim, smeval_descriptors** out) {
  return Guard([&] {
    Require(out != nullptr && (data != nullptr || rows * dim == 0),
            "null argument");
    DescriptorSet::Matrix m(static_cast<Eigen::Index>(rows),
                            static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < rows * dim; ++k) m.data()[k] = data[k];
    *out = new smeval_descriptors{DescriptorSet(std::move(m))};
  });
}

smeval_status smeval_descriptors_to_bytes(const smeval_descriptors* d,
                                          char** out, size_t* len) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr && len != nullptr, "null argument");
    std::ostringstream os(std::ios::out | std::ios::binary);
    WriteDescriptors(os, d->value);
    const std::string bytes = os.str();
    *out = CopyString(bytes);
    *len = bytes.size();
  });
}

size_t smeval_descriptors_rows(const smeval_descriptors* d) {
  return d == nullptr ? 0 : d->value.rows();
}

size_t smeval_descriptors_dim(const smeval_descriptors* d) {
  return d == nullptr ? 0 : d->value.dimension();
}

smeval_status smeval_descriptors_get(const smeval_descriptors* d, size_t row,
                                     size_t col, double* out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    Require(row < d->value.rows() && col < d->value.dimension(),
            "descriptor index out of range");
    *out = d->value.data()(static_cast<Eigen::Index>(row),
                           static_cast<Eigen::Index>(col));
  });
}

void smeval_descriptors_free(smeval_descriptors* d) { delete d; }

// ---- Ground truth ---------------------------------------------------------

smeval_status smeval_ground_truth_parse(const char* text, size_t len,
                                        smeval_ground_truth** out) {
  return Guard([&] {
    Require(out != nullptr && (text != nullptr || len == 0), "null argument");
    std::istringstream in(std::string(text == nullptr ? "" : text, len));
    *out = new smeval_ground_truth{ParseGroundTruth(in)};
  });
}

smeval_status smeval_ground_truth_read_file(const char* path,
                                            smeval_ground_truth** out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    auto in = OpenInput(path, std::ios::in);
    *out = new smeval_ground_truth{ParseGroundTruth(in)};
  });
}

smeval_status smeval_ground_truth_to_text(const smeval_ground_truth* gt,
                                          char** out) {
  return Guard([&] {
    Require(gt != nullptr && out != nullptr, "null argument");
    std::ostringstream os;
    WriteGroundTruth(os, gt->value);
    *out = CopyString(os.str());
  });
}

size_t smeval_ground_truth_size(const smeval_ground_truth* gt) {
  return gt == nullptr ? 0 : gt->value.size();
}

void smeval_ground_truth_free(smeval_ground_truth* gt) { delete gt; }

smeval_status smeval_associate(const smeval_trajectory* t,
                               const smeval_ground_truth* gt, double max_dt,
                               smeval_aligned** out) {
  return Guard([&] {
    Require(t != nullptr && gt != nullptr && out != nullptr, "null argument");
    *out = new smeval_aligned{AssociateGroundTruth(t->value, gt->value, max_dt)};
  });
}

size_t smeval_aligned_dropped_count(const smeval_aligned* a) {
  return a == nullptr ? 0 : a->value.dropped_frame_count();
}

smeval_status smeval_aligned_trajectory(const smeval_aligned* a,
                                        smeval_trajectory** out) {
  return Guard([&] {
    Require(a != nullptr && out != nullptr, "null argument");
    *out = new smeval_trajectory{a->value.trajectory()};
  });
}

void smeval_aligned_free(smeval_aligned* a) { delete a; }

// ---- Distances ------------------------------------------------------------

smeval_status smeval_temporal_distances(const smeval_trajectory* t,
                                        smeval_distances** out) {
  return Guard([&] {
    Require(t != nullptr && out != nullptr, "null argument");
    *out = new smeval_distances{TemporalSubmapDistances(t->value)};
  });
}

smeval_status smeval_frame_distances_compute(const smeval_descriptors* d,
                                             smeval_metric metric,
                                             unsigned threads,
                                             smeval_frame_distances** out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    *out = new smeval_frame_distances{
        FrameDescriptorDistances(d->value, FromC(metric), threads)};
  });
}

size_t smeval_frame_distances_size(const smeval_frame_distances* f) {
  return f == nullptr ? 0 : f->value.size();
}

smeval_status smeval_frame_distances_get(const smeval_frame_distances* f,
                                         size_t i, size_t j, double* out) {
  return Guard([&] {
    Require(f != nullptr && out != nullptr, "null argument");
    Require(i < f->value.size() && j < f->value.size(), "index out of range");
    *out = f->value.at(i, j);
  });
}

void smeval_frame_distances_free(smeval_frame_distances* f) { delete f; }

smeval_status smeval_aggregate_to_submaps(const smeval_frame_distances* f,
                                          const smeval_trajectory* t,
                                          smeval_distances** out) {
  return Guard([&] {
    Require(f != nullptr && t != nullptr && out != nullptr, "null argument");
    *out = new smeval_distances{AggregateToSubmaps(f->value, t->value)};
  });
}

smeval_status smeval_vpr_distances_streaming(const smeval_descriptors* d,
                                             const smeval_trajectory* t,
                                             smeval_metric metric,
                                             smeval_distances** out) {
  return Guard([&] {
    Require(d != nullptr && t != nullptr && out != nullptr, "null argument");
    *out = new smeval_distances{
        StreamingSubmapDistances(d->value, t->value, FromC(metric))};
  });
}

smeval_status smeval_distances_create(smeval_distance_kind kind, size_t m,
                                      const double* values,
                                      smeval_distances** out) {
  return Guard([&] {
    Require(out != nullptr && (values != nullptr || m == 0), "null argument");
    Require(kind == SMEVAL_DISTANCE_TIME || kind == SMEVAL_DISTANCE_VPR,
            "unknown distance kind");
    *out = new smeval_distances{SubmapDistanceMatrix(
        kind == SMEVAL_DISTANCE_TIME ? DistanceKind::kTime : DistanceKind::kVpr,
        m, std::vector<double>(values, values + m * m))};
  });
}

size_t smeval_distances_size(const smeval_distances* s) {
  return s == nullptr ? 0 : s->value.size();
}

smeval_distance_kind smeval_distances_kind(const smeval_distances* s) {
  return s != nullptr && s->value.kind() == DistanceKind::kVpr
             ? SMEVAL_DISTANCE_VPR
             : SMEVAL_DISTANCE_TIME;
}

smeval_status smeval_distances_get(const smeval_distances* s, size_t i,
                                   size_t j, double* out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "null argument");
    Require(i < s->value.size() && j < s->value.size(), "index out of range");
    *out = s->value.at(i, j);
  });
}

smeval_status smeval_distances_to_csv(const smeval_distances* s, char** out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "null argument");
    *out = CopyString(DistanceMatrixToCsv(s->value));
  });
}

void smeval_distances_free(smeval_distances* s) { delete s; }

// ---- Merge rules ----------------------------------------------------------

smeval_status smeval_rule_preset(const char* name, smeval_rule_params* out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "null argument");
    const std::string n = name;
    if (n == "time") {
      *out = ToC(MergeRuleParams::Time());
    } else if (n == "vpr") {
      *out = ToC(MergeRuleParams::Vpr());
    } else if (n == "comb1") {
      *out = ToC(MergeRuleParams::Comb1());
    } else if (n == "comb2") {
      *out = ToC(MergeRuleParams::Comb2());
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown rule preset '" + n + "'");
    }
  });
}

smeval_status smeval_threshold_adjacency(const smeval_distances* s, double tau,
                                         smeval_adjacency** out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "null argument");
    *out = new smeval_adjacency{ThresholdAdjacency(s->value, tau), std::nullopt};
  });
}

smeval_status smeval_combined_adjacency(const smeval_distances* s_time,
                                        const smeval_distances* s_vpr,
                                        const smeval_rule_params* params,
                                        double tau_vpr, smeval_adjacency** out) {
  return Guard([&] {
    Require(s_time != nullptr && s_vpr != nullptr && params != nullptr &&
                out != nullptr,
            "null argument");
    *out = new smeval_adjacency{
        CombinedAdjacency(s_time->value, s_vpr->value, FromC(*params), tau_vpr),
        std::nullopt};
  });
}

smeval_status smeval_ground_truth_adjacency(const smeval_aligned* a,
                                            double eps_dist, double eps_rot_deg,
                                            smeval_adjacency** out) {
  return Guard([&] {
    Require(a != nullptr && out != nullptr, "null argument");
    *out = new smeval_adjacency{
        GroundTruthAdjacency(a->value, eps_dist, eps_rot_deg), std::nullopt};
  });
}

smeval_status smeval_adjacency_create(size_t m, const uint8_t* values,
                                      smeval_adjacency** out) {
  return Guard([&] {
    Require(out != nullptr && (values != nullptr || m == 0), "null argument");
    *out = new smeval_adjacency{
        AdjacencyMatrix(m, std::vector<std::uint8_t>(values, values + m * m)),
        std::nullopt};
  });
}

size_t smeval_adjacency_size(const smeval_adjacency* a) {
  return a == nullptr ? 0 : a->value.size();
}

int smeval_adjacency_get(const smeval_adjacency* a, size_t i, size_t j) {
  if (a == nullptr || i >= a->value.size() || j >= a->value.size()) return -1;
  return a->value.at(i, j) ? 1 : 0;
}

smeval_status smeval_adjacency_to_csv(const smeval_adjacency* a,
                                      const char* rule, double tau, char** out) {
  return Guard([&] {
    Require(a != nullptr && rule != nullptr && out != nullptr, "null argument");
    *out = CopyString(AdjacencyToCsv(a->value, rule, tau));
  });
}

void smeval_adjacency_free(smeval_adjacency* a) { delete a; }

// ---- Reachability and metrics --------------------------------------------

smeval_status smeval_transitive_closure(const smeval_adjacency* a,
                                        smeval_adjacency** out) {
  return Guard([&] {
    Require(a != nullptr && out != nullptr, "null argument");
    ReachabilityMatrix r = TransitiveClosure(a->value);
    AdjacencyMatrix as_adj(r.size(), std::vector<std::uint8_t>(
                                         r.values().begin(), r.values().end()));
    *out = new smeval_adjacency{std::move(as_adj), std::move(r)};
  });
}

smeval_status smeval_evaluate_reachability(const smeval_adjacency* r,
                                        const smeval_adjacency* r_gt,
                                        const smeval_trajectory* t,
                                        smeval_precision_coverage* out) {
  return Guard([&] {
    Require(r != nullptr && r_gt != nullptr && t != nullptr && out != nullptr,
            "null argument");
    std::optional<ReachabilityMatrix> s1, s2;
    const PrecisionCoverage pc = ComputePrecisionCoverage(
        Closed(r, s1), Closed(r_gt, s2), ComputeWeightVector(t->value));
    *out = {pc.precision, pc.coverage, pc.weighted_tp, pc.weighted_fp};
  });
}

smeval_status smeval_sweep(const smeval_rule_params* params,
                           const smeval_distances* s_time,
                           const smeval_distances* s_vpr,
                           const smeval_adjacency* r_gt,
                           const smeval_trajectory* t, smeval_curve** out) {
  return Guard([&] {
    Require(params != nullptr && r_gt != nullptr && t != nullptr &&
                out != nullptr,
            "null argument");
    std::optional<ReachabilityMatrix> scratch;
    *out = new smeval_curve{SweepCurve(
        FromC(*params), s_time == nullptr ? nullptr : &s_time->value,
        s_vpr == nullptr ? nullptr : &s_vpr->value, Closed(r_gt, scratch),
        ComputeWeightVector(t->value))};
  });
}

smeval_status smeval_auc(const smeval_curve_point* points, size_t count,
                         double* out) {
  return Guard([&] {
    Require(out != nullptr && (points != nullptr || count == 0),
            "null argument");
    std::vector<CurvePoint> pts(count);
    for (std::size_t k = 0; k < count; ++k) {
      pts[k] = {points[k].threshold, points[k].precision, points[k].coverage,
                points[k].weighted_tp, points[k].weighted_fp};
    }
    *out = Auc(pts);
  });
}

size_t smeval_curve_size(const smeval_curve* c) {
  return c == nullptr ? 0 : c->value.points().size();
}

smeval_status smeval_curve_point_at(const smeval_curve* c, size_t index,
                                    smeval_curve_point* out) {
  return Guard([&] {
    Require(c != nullptr && out != nullptr, "null argument");
    Require(index < c->value.points().size(), "point index out of range");
    const CurvePoint& p = c->value.points()[index];
    *out = {p.threshold, p.precision, p.coverage, p.weighted_tp, p.weighted_fp};
  });
}

double smeval_curve_auc(const smeval_curve* c) {
  return c == nullptr ? 0.0 : c->value.auc();
}

smeval_status smeval_curve_to_csv(const smeval_curve* c, char** out) {
  return Guard([&] {
    Require(c != nullptr && out != nullptr, "null argument");
    *out = CopyString(CurveToCsv(c->value));
  });
}

smeval_status smeval_curve_from_csv(const char* text, size_t len,
                                    smeval_curve** out) {
  return Guard([&] {
    Require(out != nullptr && (text != nullptr || len == 0), "null argument");
    *out = new smeval_curve{
        CurveFromCsv(std::string_view(text == nullptr ? "" : text, len))};
  });
}

void smeval_curve_free(smeval_curve* c) { delete c; }

smeval_status smeval_frame_precision_recall(const smeval_frame_distances* f,
                                            const smeval_aligned* a,
                                            double eps_dist, double eps_rot_deg,
                                            double min_time_separation,
                                            smeval_frame_pr** out) {
  return Guard([&] {
    Require(f != nullptr && a != nullptr && out != nullptr, "null argument");
    *out = new smeval_frame_pr{FramePrecisionRecall(
        f->value, a->value, eps_dist, eps_rot_deg, min_time_separation)};
  });
}

size_t smeval_frame_pr_size(const smeval_frame_pr* pr) {
  return pr == nullptr ? 0 : pr->value.size();
}

smeval_status smeval_frame_pr_point_at(const smeval_frame_pr* pr, size_t index,
                                       smeval_frame_pr_point* out) {
  return Guard([&] {
    Require(pr != nullptr && out != nullptr, "null argument");
    Require(index < pr->value.size(), "point index out of range");
    const FramePrPoint& p = pr->value[index];
    *out = {p.threshold,       p.precision,
            p.recall,          p.true_positives,
            p.false_positives, p.false_negatives};
  });
}

smeval_status smeval_frame_pr_to_csv(const smeval_frame_pr* pr, char** out) {
  return Guard([&] {
    Require(pr != nullptr && out != nullptr, "null argument");
    *out = CopyString(FramePrToCsv(pr->value));
  });
}

void smeval_frame_pr_free(smeval_frame_pr* pr) { delete pr; }

// ---- Reports --------------------------------------------------------------

smeval_status smeval_summary_json(const smeval_rule_summary* rules,
                                  size_t count, const smeval_run_info* info,
                                  char** out) {
  return Guard([&] {
    Require(info != nullptr && out != nullptr, "null argument");
    RunInfo ri;
    ri.num_submaps = info->num_submaps;
    ri.num_frames = info->num_frames;
    ri.dropped_frames = info->dropped_frames;
    ri.metric = info->metric == nullptr ? "" : info->metric;
    ri.eps_dist = info->eps_dist;
    ri.eps_rot_deg = info->eps_rot_deg;
    ri.max_dt = info->max_dt;
    *out = CopyString(SummaryJson(Summaries(rules, count), ri));
  });
}

smeval_status smeval_auc_table(const smeval_rule_summary* rules, size_t count,
                               char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = CopyString(AucTableMarkdown(Summaries(rules, count)));
  });
}

smeval_status smeval_plot_svg(const smeval_rule_summary* rules, size_t count,
                              const char* title, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Summaries(rules, count);  // validates the entries
    std::vector<NamedCurve> curves;
    for (std::size_t k = 0; k < count; ++k) {
      curves.push_back({rules[k].rule, &rules[k].curve->value});
    }
    *out = CopyString(PrecisionCoverageSvg(
        curves, title == nullptr ? "precision-coverage" : title));
  });
}

// ---- Synthetic worlds -----------------------------------------------------

void smeval_world_config_default(smeval_world_config* cfg) {
  if (cfg == nullptr) return;
  const WorldConfig w;
  cfg->num_places = w.num_places;
  cfg->num_submaps = w.num_submaps;
  cfg->frames_per_submap_min = w.frames_per_submap_min;
  cfg->frames_per_submap_max = w.frames_per_submap_max;
  cfg->revisit_probability = w.revisit_probability;
  cfg->descriptor_dim = w.descriptor_dim;
  cfg->descriptor_noise_sigma = w.descriptor_noise_sigma;
  cfg->dropout_gap_min = w.dropout_gap_min;
  cfg->dropout_gap_max = w.dropout_gap_max;
  cfg->frame_period = w.frame_period;
  cfg->rng_seed = w.rng_seed;
}

smeval_status smeval_world_generate(const smeval_world_config* cfg,
                                    smeval_world** out) {
  return Guard([&] {
    Require(cfg != nullptr && out != nullptr, "null argument");
    const WorldConfig config = FromC(*cfg);
    *out = new smeval_world{GenerateWorld(config), config};
  });
}

smeval_status smeval_world_trajectory(const smeval_world* w,
                                      smeval_trajectory** out) {
  return Guard([&] {
    Require(w != nullptr && out != nullptr, "null argument");
    *out = new smeval_trajectory{w->value.trajectory};
  });
}

smeval_status smeval_world_descriptors(const smeval_world* w,
                                       smeval_descriptors** out) {
  return Guard([&] {
    Require(w != nullptr && out != nullptr, "null argument");
    *out = new smeval_descriptors{w->value.descriptors};
  });
}

smeval_status smeval_world_ground_truth(const smeval_world* w,
                                        smeval_ground_truth** out) {
  return Guard([&] {
    Require(w != nullptr && out != nullptr, "null argument");
    *out = new smeval_ground_truth{w->value.ground_truth};
  });
}

smeval_status smeval_world_true_adjacency(const smeval_world* w,
                                          smeval_adjacency** out) {
  return Guard([&] {
    Require(w != nullptr && out != nullptr, "null argument");
    *out = new smeval_adjacency{w->value.shared_place_adjacency, std::nullopt};
  });
}

smeval_status smeval_world_truth_json(const smeval_world* w, char** out) {
  return Guard([&] {
    Require(w != nullptr && out != nullptr, "null argument");
    *out = CopyString(WorldTruthJson(w->value, w->config));
  });
}

void smeval_world_free(smeval_world* w) { delete w; }

}  // extern "C"
