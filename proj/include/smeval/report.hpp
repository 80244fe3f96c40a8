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

#ifndef SMEVAL_REPORT_HPP_
#define SMEVAL_REPORT_HPP_

// Text renderings of pipeline results. All numbers use the shortest
// round-trip decimal form, so identical inputs give byte-identical output.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smeval/core_model.hpp"
#include "smeval/reachability.hpp"
#include "smeval/synthesis.hpp"

namespace smeval {

/// Header: threshold,precision,coverage,weighted_tp,weighted_fp
std::string CurveToCsv(const Curve& curve);
/// Inverse of CurveToCsv. Throws ParseError.
Curve CurveFromCsv(std::string_view text);

/// Header line "# M=<m> kind=<time|vpr>", then M rows of M values.
std::string DistanceMatrixToCsv(const SubmapDistanceMatrix& s);
/// Header line "# M=<m> rule=<name> tau=<value>", then M rows of 0/1.
std::string AdjacencyToCsv(const BoolMatrix& a, std::string_view rule,
                           double tau);

/// Header: threshold,precision,recall,tp,fp,fn
std::string FramePrToCsv(std::span<const FramePrPoint> curve);

struct RuleSummary {
  std::string rule;  ///< preset name, e.g. "comb1"
  MergeRuleParams params;
  double auc = 0.0;
  std::size_t num_points = 0;
};

struct RunInfo {
  std::size_t num_submaps = 0;  ///< M after ground-truth alignment
  std::size_t num_frames = 0;   ///< N after ground-truth alignment
  std::size_t dropped_frames = 0;
  std::string metric;  ///< empty if no descriptors were used
  double eps_dist = 0.0;
  double eps_rot_deg = 0.0;
  double max_dt = 0.0;
};

/// {"rules": [{rule, params, auc, num_points, M, N}, ...], "auc_table":
/// {rule: auc}, plus run metadata}. Key order is fixed.
std::string SummaryJson(std::span<const RuleSummary> rules,
                        const RunInfo& info);

struct NamedCurve {
  std::string name;
  const Curve* curve = nullptr;
};

/// Precision-coverage plot with one polyline per curve and a legend.
std::string PrecisionCoverageSvg(std::span<const NamedCurve> curves,
                                 std::string_view title);

/// Markdown table of rule name and AUC.
std::string AucTableMarkdown(std::span<const RuleSummary> rules);

/// JSON sidecar for synthetic worlds: seed, M, N, frame places and the
/// shared-place adjacency.
std::string WorldTruthJson(const World& world, const WorldConfig& cfg);

}  // namespace smeval

#endif  // SMEVAL_REPORT_HPP_
