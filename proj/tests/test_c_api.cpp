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

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "smeval/smeval.h"

namespace {

std::string Take(char* s) {
  std::string out(s);
  smeval_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(smeval_status_name(SMEVAL_OK)) == "Ok");
  CHECK(std::string(smeval_status_name(SMEVAL_ERR_PARSE)) == "ParseError");
  smeval_trajectory* t = nullptr;
  const char text[] = "1 0 0 0 0 1 0 0\n";
  CHECK(smeval_trajectory_parse(text, std::strlen(text), &t) == SMEVAL_ERR_PARSE);
  CHECK(t == nullptr);
  CHECK(std::string(smeval_last_error()).find("line 1") != std::string::npos);
  CHECK(smeval_trajectory_parse(nullptr, 0, nullptr) ==
        SMEVAL_ERR_INVALID_ARGUMENT);
  CHECK(smeval_trajectory_read_file("/nonexistent/file", &t) ==
        SMEVAL_ERR_IO);
  smeval_trajectory_free(nullptr);
}

TEST_CASE("trajectory handles") {
  smeval_frame frames[3] = {};
  for (int k = 0; k < 3; ++k) {
    frames[k].timestamp = k;
    frames[k].orientation[0] = 1.0;
    frames[k].submap_id = k == 1 ? 4 : 9;
    frames[k].descriptor_row = -1;
  }
  smeval_trajectory* t = nullptr;
  REQUIRE(smeval_trajectory_from_frames(frames, 3, &t) == SMEVAL_OK);
  CHECK(smeval_trajectory_frame_count(t) == 3);
  CHECK(smeval_trajectory_submap_count(t) == 2);
  smeval_frame f{};
  REQUIRE(smeval_trajectory_frame(t, 1, &f) == SMEVAL_OK);
  CHECK(f.submap_id == 1);
  CHECK(f.descriptor_row == -1);
  CHECK(smeval_trajectory_frame(t, 3, &f) == SMEVAL_ERR_INVALID_ARGUMENT);
  uint64_t w[2] = {};
  REQUIRE(smeval_trajectory_weights(t, w) == SMEVAL_OK);
  CHECK(w[0] == 2);
  CHECK(w[1] == 1);

  char* text = nullptr;
  REQUIRE(smeval_trajectory_to_text(t, &text) == SMEVAL_OK);
  const std::string s = Take(text);
  smeval_trajectory* again = nullptr;
  REQUIRE(smeval_trajectory_parse(s.data(), s.size(), &again) == SMEVAL_OK);
  CHECK(smeval_trajectory_frame_count(again) == 3);
  smeval_trajectory_free(again);

  frames[2].timestamp = -1;
  smeval_trajectory* bad = nullptr;
  CHECK(smeval_trajectory_from_frames(frames, 3, &bad) ==
        SMEVAL_ERR_NON_MONOTONIC_TIMESTAMPS);
  smeval_trajectory_free(t);
}

TEST_CASE("adjacency, closure and metrics") {
  const uint8_t chain[9] = {1, 1, 0, 1, 1, 1, 0, 1, 1};
  smeval_adjacency* a = nullptr;
  REQUIRE(smeval_adjacency_create(3, chain, &a) == SMEVAL_OK);
  CHECK(smeval_adjacency_get(a, 0, 2) == 0);
  CHECK(smeval_adjacency_get(a, 5, 0) == -1);
  smeval_adjacency* r = nullptr;
  REQUIRE(smeval_transitive_closure(a, &r) == SMEVAL_OK);
  CHECK(smeval_adjacency_get(r, 0, 2) == 1);

  smeval_frame frames[6] = {};
  const int64_t ids[6] = {0, 1, 1, 2, 2, 2};
  for (int k = 0; k < 6; ++k) {
    frames[k].timestamp = k;
    frames[k].orientation[0] = 1.0;
    frames[k].submap_id = ids[k];
    frames[k].descriptor_row = -1;
  }
  smeval_trajectory* t = nullptr;
  REQUIRE(smeval_trajectory_from_frames(frames, 6, &t) == SMEVAL_OK);
  smeval_precision_coverage pc{};
  REQUIRE(smeval_evaluate_reachability(r, r, t, &pc) == SMEVAL_OK);
  CHECK(pc.precision == 1.0);
  CHECK(pc.coverage == 1.0);
  // The unclosed chain is rejected as a reachability matrix.
  CHECK(smeval_evaluate_reachability(a, r, t, &pc) ==
        SMEVAL_ERR_INVARIANT_VIOLATION);

  char* csv = nullptr;
  REQUIRE(smeval_adjacency_to_csv(a, "vpr", 0.5, &csv) == SMEVAL_OK);
  CHECK(Take(csv).rfind("# M=3 rule=vpr tau=0.5\n", 0) == 0);
  smeval_adjacency_free(a);
  smeval_adjacency_free(r);
  smeval_trajectory_free(t);
}

TEST_CASE("auc through the C interface") {
  const smeval_curve_point pts[2] = {{0, 1.0, 0.5, 0, 0}, {1, 0.5, 1.0, 0, 0}};
  double auc = 0.0;
  REQUIRE(smeval_auc(pts, 2, &auc) == SMEVAL_OK);
  CHECK(auc == doctest::Approx(0.875));
  CHECK(smeval_auc(pts, 0, &auc) == SMEVAL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rule presets") {
  smeval_rule_params p{};
  REQUIRE(smeval_rule_preset("comb1", &p) == SMEVAL_OK);
  CHECK(p.kind == SMEVAL_RULE_COMBINED);
  CHECK(p.tau_time == 2.0);
  CHECK(p.f_time == 10.0);
  CHECK(p.f_vpr == 2.0);
  REQUIRE(smeval_rule_preset("comb2", &p) == SMEVAL_OK);
  CHECK(p.tau_time == 0.5);
  CHECK(p.f_vpr == 4.0);
  CHECK(smeval_rule_preset("nope", &p) == SMEVAL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("synthetic world through the full pipeline") {
  smeval_world_config cfg;
  smeval_world_config_default(&cfg);
  cfg.num_submaps = 5;
  cfg.num_places = 500;
  cfg.descriptor_dim = 32;
  smeval_world* w = nullptr;
  REQUIRE(smeval_world_generate(&cfg, &w) == SMEVAL_OK);
  smeval_trajectory* t = nullptr;
  smeval_descriptors* d = nullptr;
  smeval_ground_truth* gt = nullptr;
  REQUIRE(smeval_world_trajectory(w, &t) == SMEVAL_OK);
  REQUIRE(smeval_world_descriptors(w, &d) == SMEVAL_OK);
  REQUIRE(smeval_world_ground_truth(w, &gt) == SMEVAL_OK);
  CHECK(smeval_descriptors_rows(d) == smeval_trajectory_frame_count(t));
  CHECK(smeval_descriptors_dim(d) == 32);

  // Descriptor bytes round trip.
  char* bytes = nullptr;
  size_t len = 0;
  REQUIRE(smeval_descriptors_to_bytes(d, &bytes, &len) == SMEVAL_OK);
  CHECK(len == 16 + 4 * 32 * smeval_descriptors_rows(d));
  smeval_descriptors* d2 = nullptr;
  REQUIRE(smeval_descriptors_parse(bytes, len, &d2) == SMEVAL_OK);
  smeval_string_free(bytes);
  double x = 0, y = 0;
  REQUIRE(smeval_descriptors_get(d, 3, 7, &x) == SMEVAL_OK);
  REQUIRE(smeval_descriptors_get(d2, 3, 7, &y) == SMEVAL_OK);
  CHECK(x == y);
  smeval_descriptors_free(d2);

  smeval_aligned* al = nullptr;
  REQUIRE(smeval_associate(t, gt, 0.1, &al) == SMEVAL_OK);
  CHECK(smeval_aligned_dropped_count(al) == 0);
  smeval_adjacency* a_gt = nullptr;
  smeval_adjacency* r_gt = nullptr;
  REQUIRE(smeval_ground_truth_adjacency(al, 10.0, 20.0, &a_gt) == SMEVAL_OK);
  REQUIRE(smeval_transitive_closure(a_gt, &r_gt) == SMEVAL_OK);

  smeval_distances* st = nullptr;
  smeval_distances* sv = nullptr;
  smeval_distances* sv2 = nullptr;
  smeval_frame_distances* fdm = nullptr;
  REQUIRE(smeval_temporal_distances(t, &st) == SMEVAL_OK);
  REQUIRE(smeval_vpr_distances_streaming(d, t, SMEVAL_METRIC_COSINE, &sv) ==
          SMEVAL_OK);
  REQUIRE(smeval_frame_distances_compute(d, SMEVAL_METRIC_COSINE, 2, &fdm) ==
          SMEVAL_OK);
  REQUIRE(smeval_aggregate_to_submaps(fdm, t, &sv2) == SMEVAL_OK);
  CHECK(smeval_distances_kind(sv) == SMEVAL_DISTANCE_VPR);
  for (size_t i = 0; i < 5; ++i) {
    for (size_t j = 0; j < 5; ++j) {
      double p = 0, q = 0;
      smeval_distances_get(sv, i, j, &p);
      smeval_distances_get(sv2, i, j, &q);
      CHECK(p == q);
    }
  }

  smeval_rule_params comb1{};
  smeval_rule_preset("comb1", &comb1);
  smeval_curve* curve = nullptr;
  REQUIRE(smeval_sweep(&comb1, st, sv, r_gt, t, &curve) == SMEVAL_OK);
  CHECK(smeval_curve_size(curve) >= 2);
  const double auc = smeval_curve_auc(curve);
  CHECK(auc > 0.0);
  CHECK(auc <= 1.0);

  smeval_rule_params time_rule{};
  smeval_rule_preset("time", &time_rule);
  smeval_curve* missing = nullptr;
  CHECK(smeval_sweep(&comb1, st, nullptr, r_gt, t, &missing) ==
        SMEVAL_ERR_INVALID_ARGUMENT);
  smeval_curve* time_curve = nullptr;
  REQUIRE(smeval_sweep(&time_rule, st, nullptr, r_gt, t, &time_curve) ==
          SMEVAL_OK);

  char* csv = nullptr;
  REQUIRE(smeval_curve_to_csv(curve, &csv) == SMEVAL_OK);
  const std::string csv_text = Take(csv);
  smeval_curve* parsed = nullptr;
  REQUIRE(smeval_curve_from_csv(csv_text.data(), csv_text.size(), &parsed) ==
          SMEVAL_OK);
  CHECK(smeval_curve_auc(parsed) == auc);
  smeval_curve_free(parsed);

  const smeval_rule_summary rules[2] = {{"comb1", comb1, curve},
                                        {"time", time_rule, time_curve}};
  smeval_run_info info{5, smeval_trajectory_frame_count(t), 0, "cosine",
                       10.0, 20.0, 0.1};
  char* json = nullptr;
  REQUIRE(smeval_summary_json(rules, 2, &info, &json) == SMEVAL_OK);
  const std::string json_text = Take(json);
  CHECK(json_text.find("\"auc_table\"") != std::string::npos);
  char* svg = nullptr;
  REQUIRE(smeval_plot_svg(rules, 2, "t", &svg) == SMEVAL_OK);
  CHECK(Take(svg).find("<polyline") != std::string::npos);
  char* truth = nullptr;
  REQUIRE(smeval_world_truth_json(w, &truth) == SMEVAL_OK);
  CHECK(Take(truth).find("\"adjacency\"") != std::string::npos);

  smeval_curve_free(curve);
  smeval_curve_free(time_curve);
  smeval_distances_free(st);
  smeval_distances_free(sv);
  smeval_distances_free(sv2);
  smeval_frame_distances_free(fdm);
  smeval_adjacency_free(a_gt);
  smeval_adjacency_free(r_gt);
  smeval_aligned_free(al);
  smeval_ground_truth_free(gt);
  smeval_descriptors_free(d);
  smeval_trajectory_free(t);
  smeval_world_free(w);
}
