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

#include "smeval/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "text_util.hpp"

namespace smeval {
namespace {

using detail::FormatDouble;
using json = nlohmann::ordered_json;

// Fixed-precision formatting for SVG coordinates.
std::string Fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string EscapeXml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

json ParamsJson(const MergeRuleParams& p) {
  json j;
  j["kind"] = std::string(RuleKindName(p.kind));
  if (p.kind == RuleKind::kCombined) {
    j["tau_time"] = p.tau_time;
    j["f_time"] = p.f_time;
    j["f_vpr"] = p.f_vpr;
  }
  return j;
}

}  // namespace

std::string CurveToCsv(const Curve& curve) {
  std::string out = "threshold,precision,coverage,weighted_tp,weighted_fp\n";
  for (const CurvePoint& p : curve.points()) {
    out += FormatDouble(p.threshold) + ',' + FormatDouble(p.precision) + ',' +
           FormatDouble(p.coverage) + ',' + FormatDouble(p.weighted_tp) + ',' +
           FormatDouble(p.weighted_fp) + '\n';
  }
  return out;
}

Curve CurveFromCsv(std::string_view text) {
  std::vector<CurvePoint> points;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (detail::IsSkippableLine(line)) continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("threshold", 0) == 0) continue;
    }
    const auto fields = detail::SplitFields(line);
    if (fields.size() != 5) {
      throw ParseError(line_no, "curve rows need 5 columns");
    }
    std::array<double, 5> v{};
    for (std::size_t k = 0; k < 5; ++k) {
      auto parsed = detail::ParseDouble(fields[k]);
      if (!parsed) {
        throw ParseError(line_no, "bad number '" + std::string(fields[k]) + "'");
      }
      v[k] = *parsed;
    }
    points.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  if (points.empty()) throw ParseError(0, "curve file has no points");
  return Curve(std::move(points));
}

std::string DistanceMatrixToCsv(const SubmapDistanceMatrix& s) {
  std::string out = "# M=" + std::to_string(s.size()) +
                    " kind=" + std::string(DistanceKindName(s.kind())) + '\n';
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j > 0) out += ',';
      out += FormatDouble(s.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string AdjacencyToCsv(const BoolMatrix& a, std::string_view rule,
                           double tau) {
  std::string out = "# M=" + std::to_string(a.size()) +
                    " rule=" + std::string(rule) +
                    " tau=" + FormatDouble(tau) + '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j > 0) out += ',';
      out += a.at(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string FramePrToCsv(std::span<const FramePrPoint> curve) {
  std::string out = "threshold,precision,recall,tp,fp,fn\n";
  for (const FramePrPoint& p : curve) {
    out += FormatDouble(p.threshold) + ',' + FormatDouble(p.precision) + ',' +
           FormatDouble(p.recall) + ',' + std::to_string(p.true_positives) +
           ',' + std::to_string(p.false_positives) + ',' +
           std::to_string(p.false_negatives) + '\n';
  }
  return out;
}

std::string SummaryJson(std::span<const RuleSummary> rules,
                        const RunInfo& info) {
  json root;
  root["M"] = info.num_submaps;
  root["N"] = info.num_frames;
  root["dropped_frames"] = info.dropped_frames;
  root["metric"] = info.metric;
  root["eps_dist"] = info.eps_dist;
  root["eps_rot"] = info.eps_rot_deg;
  root["max_dt"] = info.max_dt;
  json list = json::array();
  json table = json::object();
  for (const RuleSummary& r : rules) {
    json entry;
    entry["rule"] = r.rule;
    entry["params"] = ParamsJson(r.params);
    entry["auc"] = r.auc;
    entry["num_points"] = r.num_points;
    entry["M"] = info.num_submaps;
    entry["N"] = info.num_frames;
    list.push_back(std::move(entry));
    table[r.rule] = r.auc;
  }
  root["rules"] = std::move(list);
  root["auc_table"] = std::move(table);
  return root.dump(2) + '\n';
}

std::string PrecisionCoverageSvg(std::span<const NamedCurve> curves,
                                 std::string_view title) {
  constexpr double kWidth = 640, kHeight = 480;
  constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
  constexpr double kPlotW = kWidth - kLeft - kRight;
  constexpr double kPlotH = kHeight - kTop - kBottom;
  static constexpr std::array<const char*, 8> kColors = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
      "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  auto x_of = [&](double c) { return kLeft + c * kPlotW; };
  auto y_of = [&](double p) { return kTop + (1.0 - p) * kPlotH; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << Fixed(kLeft + kPlotW / 2) << "\" y=\"24\" "
      << "text-anchor=\"middle\" font-size=\"15\">" << EscapeXml(title)
      << "</text>\n";
  // Grid and ticks.
  for (int k = 0; k <= 5; ++k) {
    const double v = k / 5.0;
    svg << "<line x1=\"" << Fixed(x_of(v)) << "\" y1=\"" << Fixed(y_of(0))
        << "\" x2=\"" << Fixed(x_of(v)) << "\" y2=\"" << Fixed(y_of(1))
        << "\" stroke=\"#ddd\"/>\n";
    svg << "<line x1=\"" << Fixed(x_of(0)) << "\" y1=\"" << Fixed(y_of(v))
        << "\" x2=\"" << Fixed(x_of(1)) << "\" y2=\"" << Fixed(y_of(v))
        << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << Fixed(x_of(v)) << "\" y=\"" << Fixed(y_of(0) + 18)
        << "\" text-anchor=\"middle\">" << Fixed(v, 1) << "</text>\n";
    svg << "<text x=\"" << Fixed(x_of(0) - 8) << "\" y=\"" << Fixed(y_of(v) + 4)
        << "\" text-anchor=\"end\">" << Fixed(v, 1) << "</text>\n";
  }
  svg << "<rect x=\"" << Fixed(kLeft) << "\" y=\"" << Fixed(kTop)
      << "\" width=\"" << Fixed(kPlotW) << "\" height=\"" << Fixed(kPlotH)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << Fixed(kLeft + kPlotW / 2) << "\" y=\""
      << Fixed(kHeight - 18) << "\" text-anchor=\"middle\">coverage</text>\n";
  svg << "<text transform=\"translate(20 " << Fixed(kTop + kPlotH / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">precision</text>\n";

  for (std::size_t k = 0; k < curves.size(); ++k) {
    const char* color = kColors[k % kColors.size()];
    const Curve& curve = *curves[k].curve;
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const CurvePoint& p : curve.points()) {
      if (!first) svg << ' ';
      first = false;
      svg << Fixed(x_of(p.coverage)) << ',' << Fixed(y_of(p.precision));
    }
    svg << "\"/>\n";
    const double ly = kTop + 10 + 20.0 * static_cast<double>(k);
    const double lx = kLeft + kPlotW + 15;
    svg << "<line x1=\"" << Fixed(lx) << "\" y1=\"" << Fixed(ly) << "\" x2=\""
        << Fixed(lx + 20) << "\" y2=\"" << Fixed(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << Fixed(lx + 26) << "\" y=\"" << Fixed(ly + 4)
        << "\">" << EscapeXml(curves[k].name) << " (" << Fixed(curve.auc(), 3)
        << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string AucTableMarkdown(std::span<const RuleSummary> rules) {
  std::string out = "| rule | AUC | points |\n|---|---|---|\n";
  for (const RuleSummary& r : rules) {
    out += "| " + r.rule + " | " + Fixed(r.auc, 3) + " | " +
           std::to_string(r.num_points) + " |\n";
  }
  return out;
}

std::string WorldTruthJson(const World& world, const WorldConfig& cfg) {
  json root;
  root["seed"] = cfg.rng_seed;
  root["M"] = world.trajectory.submap_count();
  root["N"] = world.trajectory.frame_count();
  root["num_places"] = cfg.num_places;
  root["revisit_probability"] = cfg.revisit_probability;
  root["descriptor_noise_sigma"] = cfg.descriptor_noise_sigma;
  root["frame_place"] = world.frame_place;
  const auto& a = world.shared_place_adjacency;
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a.at(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  root["adjacency"] = std::move(rows);
  return root.dump(2) + '\n';
}

}  // namespace smeval
