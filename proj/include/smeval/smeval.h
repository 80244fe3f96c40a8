/*
 * Copyright 2026 The smeval Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SMEVAL_SMEVAL_H_
#define SMEVAL_SMEVAL_H_

/*
 * C interface of the submap-merging evaluation library.
 *
 * Conventions:
 *  - Every fallible function returns smeval_status. On failure, outputs are
 *    left untouched and smeval_last_error() returns a message describing the
 *    failure (thread-local, valid until the next failing call on the same
 *    thread).
 *  - Objects are opaque handles created by the library and released with
 *    the matching *_free function. Passing NULL to *_free is a no-op.
 *    Handles are immutable and may be shared between threads.
 *  - Strings returned through `char**` are heap allocated and released with
 *    smeval_string_free.
 *  - Matrix indices are 0-based; submap ids are re-indexed to 0..M-1 in order
 *    of first appearance.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SMEVAL_BUILDING_LIBRARY)
#    define SMEVAL_API __declspec(dllexport)
#  else
#    define SMEVAL_API __declspec(dllimport)
#  endif
#else
#  define SMEVAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smeval_status {
  SMEVAL_OK = 0,
  SMEVAL_ERR_INVALID_ARGUMENT = 1,
  SMEVAL_ERR_PARSE = 2,
  SMEVAL_ERR_EMPTY_TRAJECTORY = 3,
  SMEVAL_ERR_NON_MONOTONIC_TIMESTAMPS = 4,
  SMEVAL_ERR_INVALID_ORIENTATION = 5,
  SMEVAL_ERR_DUPLICATE_TIMESTAMP = 6,
  SMEVAL_ERR_EMPTY_SUBMAP_AFTER_ALIGNMENT = 7,
  SMEVAL_ERR_NO_OVERLAP = 8,
  SMEVAL_ERR_ZERO_NORM_DESCRIPTOR = 9,
  SMEVAL_ERR_MISSING_DESCRIPTOR = 10,
  SMEVAL_ERR_DIMENSION_MISMATCH = 11,
  SMEVAL_ERR_DEGENERATE_EVALUATION = 12,
  SMEVAL_ERR_NO_GROUND_TRUTH_MATCHES = 13,
  SMEVAL_ERR_INVALID_CONFIG = 14,
  SMEVAL_ERR_INVARIANT_VIOLATION = 15,
  SMEVAL_ERR_IO = 16,
  SMEVAL_ERR_INTERNAL = 99
} smeval_status;

typedef enum smeval_metric {
  SMEVAL_METRIC_COSINE = 0,
  SMEVAL_METRIC_EUCLIDEAN = 1
} smeval_metric;

typedef enum smeval_rule_kind {
  SMEVAL_RULE_TIME = 0,
  SMEVAL_RULE_VPR = 1,
  SMEVAL_RULE_COMBINED = 2
} smeval_rule_kind;

typedef enum smeval_distance_kind {
  SMEVAL_DISTANCE_TIME = 0,
  SMEVAL_DISTANCE_VPR = 1
} smeval_distance_kind;

typedef struct smeval_trajectory smeval_trajectory;
typedef struct smeval_descriptors smeval_descriptors;
typedef struct smeval_ground_truth smeval_ground_truth;
typedef struct smeval_aligned smeval_aligned;
typedef struct smeval_distances smeval_distances;        /* M x M submap */
typedef struct smeval_frame_distances smeval_frame_distances;
typedef struct smeval_adjacency smeval_adjacency;        /* A or R */
typedef struct smeval_curve smeval_curve;
typedef struct smeval_frame_pr smeval_frame_pr;
typedef struct smeval_world smeval_world;

typedef struct smeval_frame {
  double timestamp;
  double position[3];
  double orientation[4]; /* w, x, y, z */
  int64_t submap_id;
  int64_t descriptor_row; /* -1 when absent */
} smeval_frame;

typedef struct smeval_rule_params {
  smeval_rule_kind kind;
  double tau_time;
  double f_time;
  double f_vpr;
} smeval_rule_params;

typedef struct smeval_precision_coverage {
  double precision;
  double coverage;
  double weighted_tp;
  double weighted_fp;
} smeval_precision_coverage;

typedef struct smeval_curve_point {
  double threshold;
  double precision;
  double coverage;
  double weighted_tp;
  double weighted_fp;
} smeval_curve_point;

typedef struct smeval_frame_pr_point {
  double threshold;
  double precision;
  double recall;
  uint64_t true_positives;
  uint64_t false_positives;
  uint64_t false_negatives;
} smeval_frame_pr_point;

typedef struct smeval_rule_summary {
  const char* rule; /* display name, e.g. "comb1" */
  smeval_rule_params params;
  const smeval_curve* curve;
} smeval_rule_summary;

typedef struct smeval_run_info {
  size_t num_submaps;
  size_t num_frames;
  size_t dropped_frames;
  const char* metric; /* NULL or "" when no descriptors were used */
  double eps_dist;
  double eps_rot_deg;
  double max_dt;
} smeval_run_info;

typedef struct smeval_world_config {
  size_t num_places;
  size_t num_submaps;
  size_t frames_per_submap_min;
  size_t frames_per_submap_max;
  double revisit_probability;
  size_t descriptor_dim;
  double descriptor_noise_sigma;
  double dropout_gap_min;
  double dropout_gap_max;
  double frame_period;
  uint64_t rng_seed;
} smeval_world_config;

/* ---- Errors and strings ------------------------------------------------ */

SMEVAL_API const char* smeval_version(void);
SMEVAL_API const char* smeval_status_name(smeval_status status);
SMEVAL_API const char* smeval_last_error(void);
SMEVAL_API void smeval_string_free(char* s);

/* ---- Trajectories -------------------------------------------------------
 * Text format, one frame per line: timestamp submap_id tx ty tz qw qx qy qz
 * (quaternion w FIRST). Lines starting with '#' are comments. */

SMEVAL_API smeval_status smeval_trajectory_parse(const char* text, size_t len,
                                                 smeval_trajectory** out);
SMEVAL_API smeval_status smeval_trajectory_read_file(const char* path,
                                                     smeval_trajectory** out);
SMEVAL_API smeval_status smeval_trajectory_from_frames(
    const smeval_frame* frames, size_t count, smeval_trajectory** out);
SMEVAL_API smeval_status smeval_trajectory_to_text(const smeval_trajectory* t,
                                                   char** out);
SMEVAL_API size_t smeval_trajectory_frame_count(const smeval_trajectory* t);
SMEVAL_API size_t smeval_trajectory_submap_count(const smeval_trajectory* t);
SMEVAL_API smeval_status smeval_trajectory_frame(const smeval_trajectory* t,
                                                 size_t index,
                                                 smeval_frame* out);
/* Frames per submap; `weights` must hold submap_count entries. */
SMEVAL_API smeval_status smeval_trajectory_weights(const smeval_trajectory* t,
                                                   uint64_t* weights);
/* Binds descriptor row k to frame k; counts must match. */
SMEVAL_API smeval_status smeval_trajectory_attach_descriptors(
    const smeval_trajectory* t, const smeval_descriptors* d,
    smeval_trajectory** out);
SMEVAL_API void smeval_trajectory_free(smeval_trajectory* t);

/* ---- Descriptors --------------------------------------------------------
 * Binary, little-endian: "VPRD", u32 version = 1, u32 rows, u32 dim, then
 * rows * dim float32 values, row-major. */

SMEVAL_API smeval_status smeval_descriptors_parse(const void* bytes, size_t len,
                                                  smeval_descriptors** out);
SMEVAL_API smeval_status smeval_descriptors_read_file(const char* path,
                                                      smeval_descriptors** out);
SMEVAL_API smeval_status smeval_descriptors_create(const double* data,
                                                   size_t rows, size_t dim,
                                                   smeval_descriptors** out);
/* Serialized bytes; release with smeval_string_free. */
SMEVAL_API smeval_status smeval_descriptors_to_bytes(
    const smeval_descriptors* d, char** out, size_t* len);
SMEVAL_API size_t smeval_descriptors_rows(const smeval_descriptors* d);
SMEVAL_API size_t smeval_descriptors_dim(const smeval_descriptors* d);
SMEVAL_API smeval_status smeval_descriptors_get(const smeval_descriptors* d,
                                                size_t row, size_t col,
                                                double* out);
SMEVAL_API void smeval_descriptors_free(smeval_descriptors* d);

/* ---- Ground truth -------------------------------------------------------
 * TUM format: timestamp tx ty tz qx qy qz qw (quaternion w LAST). */

SMEVAL_API smeval_status smeval_ground_truth_parse(const char* text, size_t len,
                                                   smeval_ground_truth** out);
SMEVAL_API smeval_status smeval_ground_truth_read_file(
    const char* path, smeval_ground_truth** out);
SMEVAL_API smeval_status smeval_ground_truth_to_text(
    const smeval_ground_truth* gt, char** out);
SMEVAL_API size_t smeval_ground_truth_size(const smeval_ground_truth* gt);
SMEVAL_API void smeval_ground_truth_free(smeval_ground_truth* gt);

/* Nearest-timestamp association; frames farther than max_dt are dropped. */
SMEVAL_API smeval_status smeval_associate(const smeval_trajectory* t,
                                          const smeval_ground_truth* gt,
                                          double max_dt, smeval_aligned** out);
SMEVAL_API size_t smeval_aligned_dropped_count(const smeval_aligned* a);
/* The retained frames as a new trajectory handle. */
SMEVAL_API smeval_status smeval_aligned_trajectory(const smeval_aligned* a,
                                                   smeval_trajectory** out);
SMEVAL_API void smeval_aligned_free(smeval_aligned* a);

/* ---- Distances ---------------------------------------------------------- */

SMEVAL_API smeval_status smeval_temporal_distances(const smeval_trajectory* t,
                                                   smeval_distances** out);
/* threads = 0 uses the hardware concurrency. */
SMEVAL_API smeval_status smeval_frame_distances_compute(
    const smeval_descriptors* d, smeval_metric metric, unsigned threads,
    smeval_frame_distances** out);
SMEVAL_API size_t smeval_frame_distances_size(const smeval_frame_distances* f);
SMEVAL_API smeval_status smeval_frame_distances_get(
    const smeval_frame_distances* f, size_t i, size_t j, double* out);
SMEVAL_API void smeval_frame_distances_free(smeval_frame_distances* f);
/* S_vpr: minimum frame distance between submaps. */
SMEVAL_API smeval_status smeval_aggregate_to_submaps(
    const smeval_frame_distances* f, const smeval_trajectory* t,
    smeval_distances** out);
/* S_vpr without the N x N intermediate. */
SMEVAL_API smeval_status smeval_vpr_distances_streaming(
    const smeval_descriptors* d, const smeval_trajectory* t,
    smeval_metric metric, smeval_distances** out);
SMEVAL_API smeval_status smeval_distances_create(smeval_distance_kind kind,
                                                 size_t m,
                                                 const double* values,
                                                 smeval_distances** out);
SMEVAL_API size_t smeval_distances_size(const smeval_distances* s);
SMEVAL_API smeval_distance_kind smeval_distances_kind(const smeval_distances* s);
SMEVAL_API smeval_status smeval_distances_get(const smeval_distances* s,
                                              size_t i, size_t j, double* out);
/* CSV with header "# M=<m> kind=<time|vpr>". */
SMEVAL_API smeval_status smeval_distances_to_csv(const smeval_distances* s,
                                                 char** out);
SMEVAL_API void smeval_distances_free(smeval_distances* s);

/* ---- Merge rules -------------------------------------------------------- */

/* Presets: "time", "vpr", "comb1", "comb2". */
SMEVAL_API smeval_status smeval_rule_preset(const char* name,
                                            smeval_rule_params* out);
SMEVAL_API smeval_status smeval_threshold_adjacency(const smeval_distances* s,
                                                    double tau,
                                                    smeval_adjacency** out);
SMEVAL_API smeval_status smeval_combined_adjacency(
    const smeval_distances* s_time, const smeval_distances* s_vpr,
    const smeval_rule_params* params, double tau_vpr, smeval_adjacency** out);
SMEVAL_API smeval_status smeval_ground_truth_adjacency(const smeval_aligned* a,
                                                       double eps_dist,
                                                       double eps_rot_deg,
                                                       smeval_adjacency** out);
/* `values` is row-major m*m, nonzero meaning true. */
SMEVAL_API smeval_status smeval_adjacency_create(size_t m,
                                                 const uint8_t* values,
                                                 smeval_adjacency** out);
SMEVAL_API size_t smeval_adjacency_size(const smeval_adjacency* a);
SMEVAL_API int smeval_adjacency_get(const smeval_adjacency* a, size_t i,
                                    size_t j);
/* CSV with header "# M=<m> rule=<name> tau=<value>". */
SMEVAL_API smeval_status smeval_adjacency_to_csv(const smeval_adjacency* a,
                                                 const char* rule, double tau,
                                                 char** out);
SMEVAL_API void smeval_adjacency_free(smeval_adjacency* a);

/* ---- Reachability and metrics ------------------------------------------- */

/* Returns a reachability handle (transitively closed adjacency). */
SMEVAL_API smeval_status smeval_transitive_closure(const smeval_adjacency* a,
                                                   smeval_adjacency** out);
/* Both arguments must be closed; weights come from the trajectory. */
SMEVAL_API smeval_status smeval_evaluate_reachability(
    const smeval_adjacency* r, const smeval_adjacency* r_gt,
    const smeval_trajectory* t, smeval_precision_coverage* out);
/* s_time may be NULL for the vpr rule, s_vpr for the time rule. */
SMEVAL_API smeval_status smeval_sweep(const smeval_rule_params* params,
                                      const smeval_distances* s_time,
                                      const smeval_distances* s_vpr,
                                      const smeval_adjacency* r_gt,
                                      const smeval_trajectory* t,
                                      smeval_curve** out);
SMEVAL_API smeval_status smeval_auc(const smeval_curve_point* points,
                                    size_t count, double* out);
SMEVAL_API size_t smeval_curve_size(const smeval_curve* c);
SMEVAL_API smeval_status smeval_curve_point_at(const smeval_curve* c,
                                               size_t index,
                                               smeval_curve_point* out);
SMEVAL_API double smeval_curve_auc(const smeval_curve* c);
/* CSV: threshold,precision,coverage,weighted_tp,weighted_fp */
SMEVAL_API smeval_status smeval_curve_to_csv(const smeval_curve* c, char** out);
SMEVAL_API smeval_status smeval_curve_from_csv(const char* text, size_t len,
                                               smeval_curve** out);
SMEVAL_API void smeval_curve_free(smeval_curve* c);

SMEVAL_API smeval_status smeval_frame_precision_recall(
    const smeval_frame_distances* f, const smeval_aligned* a, double eps_dist,
    double eps_rot_deg, double min_time_separation, smeval_frame_pr** out);
SMEVAL_API size_t smeval_frame_pr_size(const smeval_frame_pr* pr);
SMEVAL_API smeval_status smeval_frame_pr_point_at(const smeval_frame_pr* pr,
                                                  size_t index,
                                                  smeval_frame_pr_point* out);
/* CSV: threshold,precision,recall,tp,fp,fn */
SMEVAL_API smeval_status smeval_frame_pr_to_csv(const smeval_frame_pr* pr,
                                                char** out);
SMEVAL_API void smeval_frame_pr_free(smeval_frame_pr* pr);

/* ---- Reports ------------------------------------------------------------ */

SMEVAL_API smeval_status smeval_summary_json(const smeval_rule_summary* rules,
                                             size_t count,
                                             const smeval_run_info* info,
                                             char** out);
SMEVAL_API smeval_status smeval_auc_table(const smeval_rule_summary* rules,
                                          size_t count, char** out);
SMEVAL_API smeval_status smeval_plot_svg(const smeval_rule_summary* rules,
                                         size_t count, const char* title,
                                         char** out);

/* ---- Synthetic worlds --------------------------------------------------- */

SMEVAL_API void smeval_world_config_default(smeval_world_config* cfg);
SMEVAL_API smeval_status smeval_world_generate(const smeval_world_config* cfg,
                                               smeval_world** out);
SMEVAL_API smeval_status smeval_world_trajectory(const smeval_world* w,
                                                 smeval_trajectory** out);
SMEVAL_API smeval_status smeval_world_descriptors(const smeval_world* w,
                                                  smeval_descriptors** out);
SMEVAL_API smeval_status smeval_world_ground_truth(const smeval_world* w,
                                                   smeval_ground_truth** out);
SMEVAL_API smeval_status smeval_world_true_adjacency(const smeval_world* w,
                                                     smeval_adjacency** out);
SMEVAL_API smeval_status smeval_world_truth_json(const smeval_world* w,
                                                 char** out);
SMEVAL_API void smeval_world_free(smeval_world* w);

#ifdef __cplusplus
}
#endif

#endif /* SMEVAL_SMEVAL_H_ */
