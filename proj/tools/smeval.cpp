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

// smeval: command-line driver for the submap-merging evaluation library.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "smeval/smeval.h"

namespace {

namespace fs = std::filesystem;

constexpr double kDefaultEpsDist = 10.0;
constexpr double kDefaultEpsRot = 20.0;
constexpr double kDefaultMaxDt = 0.1;
constexpr double kDefaultMinSep = 30.0;

// Pipeline failure tagged with the stage that produced it.
struct StageError {
  std::string stage;
  std::string message;
};

// Invalid flag combination detected after parsing.
struct UsageError {
  std::string message;
};

void Check(const char* stage, smeval_status status) {
  if (status != SMEVAL_OK) {
    throw StageError{stage, std::string(smeval_status_name(status)) + ": " +
                                smeval_last_error()};
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using TrajectoryPtr = Handle<smeval_trajectory, smeval_trajectory_free>;
using DescriptorsPtr = Handle<smeval_descriptors, smeval_descriptors_free>;
using GroundTruthPtr = Handle<smeval_ground_truth, smeval_ground_truth_free>;
using AlignedPtr = Handle<smeval_aligned, smeval_aligned_free>;
using DistancesPtr = Handle<smeval_distances, smeval_distances_free>;
using FrameDistancesPtr =
    Handle<smeval_frame_distances, smeval_frame_distances_free>;
using AdjacencyPtr = Handle<smeval_adjacency, smeval_adjacency_free>;
using CurvePtr = Handle<smeval_curve, smeval_curve_free>;
using FramePrPtr = Handle<smeval_frame_pr, smeval_frame_pr_free>;
using WorldPtr = Handle<smeval_world, smeval_world_free>;

// Calls `fn(args..., &raw)` and wraps the result.
template <typename Ptr, typename Fn, typename... Args>
Ptr Make(const char* stage, Fn fn, Args... args) {
  typename Ptr::pointer raw = nullptr;
  Check(stage, fn(args..., &raw));
  return Ptr(raw);
}

template <typename Fn, typename... Args>
std::string Text(const char* stage, Fn fn, Args... args) {
  char* raw = nullptr;
  Check(stage, fn(args..., &raw));
  std::string out(raw);
  smeval_string_free(raw);
  return out;
}

// Output files are buffered and committed together once every stage has
// succeeded, each through a temporary file and a rename.
class OutputSet {
 public:
  explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}

  void Add(const std::string& name, std::string content) {
    files_.emplace_back(name, std::move(content));
  }

  void Commit() const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw StageError{"output", "cannot create " + dir_.string()};
    std::vector<std::pair<fs::path, fs::path>> staged;
    auto cleanup = [&staged] {
      for (const auto& s : staged) {
        std::error_code ignored;
        fs::remove(s.first, ignored);
      }
    };
    for (const auto& [name, content] : files_) {
      const fs::path final_path = dir_ / name;
      fs::path tmp = final_path;
      tmp += ".tmp";
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(content.data(), static_cast<std::streamsize>(content.size()));
      out.close();
      staged.emplace_back(tmp, final_path);
      if (!out) {
        cleanup();
        throw StageError{"output", "cannot write " + tmp.string()};
      }
    }
    for (const auto& [tmp, final_path] : staged) {
      fs::rename(tmp, final_path, ec);
      if (ec) {
        cleanup();
        throw StageError{"output", "cannot rename " + tmp.string()};
      }
    }
  }

 private:
  fs::path dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

struct RunConfig {
  std::string trajectory;
  std::string descriptors;
  std::string gt;
  std::vector<std::string> rules;
  std::optional<double> tau_time;
  std::optional<double> f_time;
  std::optional<double> f_vpr;
  std::string metric = "cosine";
  double eps_dist = kDefaultEpsDist;
  double eps_rot = kDefaultEpsRot;
  double max_dt = kDefaultMaxDt;
  double min_sep = kDefaultMinSep;
  std::string out = ".";
  unsigned threads = 0;
};

smeval_metric MetricOf(const std::string& name) {
  return name == "euclidean" ? SMEVAL_METRIC_EUCLIDEAN : SMEVAL_METRIC_COSINE;
}

struct RuleSpec {
  std::string name;
  smeval_rule_params params;
};

std::vector<RuleSpec> ResolveRules(const RunConfig& cfg) {
  std::vector<std::string> names = cfg.rules;
  if (names.empty()) {
    if (cfg.descriptors.empty()) {
      names = {"time"};
    } else {
      names = {"time", "vpr", "comb1", "comb2"};
    }
  }
  std::vector<RuleSpec> out;
  for (const std::string& name : names) {
    RuleSpec spec{name, {}};
    if (name == "custom") {
      if (!cfg.tau_time || !cfg.f_time || !cfg.f_vpr) {
        throw UsageError{
            "--rule custom needs --tau-time, --f-time and --f-vpr"};
      }
      spec.params = {SMEVAL_RULE_COMBINED, *cfg.tau_time, *cfg.f_time,
                     *cfg.f_vpr};
    } else {
      if (smeval_rule_preset(name.c_str(), &spec.params) != SMEVAL_OK) {
        throw UsageError{smeval_last_error()};
      }
    }
    bool duplicate = false;
    for (const RuleSpec& r : out) duplicate = duplicate || r.name == name;
    if (!duplicate) out.push_back(spec);
  }
  return out;
}

bool NeedsDescriptors(const std::vector<RuleSpec>& rules) {
  for (const RuleSpec& r : rules) {
    if (r.params.kind != SMEVAL_RULE_TIME) return true;
  }
  return false;
}

// Shared front half of the pipeline: ingest and ground-truth alignment.
struct Prepared {
  TrajectoryPtr trajectory;  // aligned, descriptors attached when loaded
  DescriptorsPtr descriptors;
  AlignedPtr aligned;
  size_t dropped = 0;
};

Prepared Prepare(const RunConfig& cfg, bool with_descriptors) {
  Prepared p;
  auto raw = Make<TrajectoryPtr>("ingest trajectory",
                                 smeval_trajectory_read_file,
                                 cfg.trajectory.c_str());
  if (with_descriptors) {
    if (cfg.descriptors.empty()) {
      throw UsageError{"the selected rules need --descriptors"};
    }
    p.descriptors = Make<DescriptorsPtr>("ingest descriptors",
                                         smeval_descriptors_read_file,
                                         cfg.descriptors.c_str());
    raw = Make<TrajectoryPtr>(
        "ingest descriptors", smeval_trajectory_attach_descriptors,
        static_cast<const smeval_trajectory*>(raw.get()),
        static_cast<const smeval_descriptors*>(p.descriptors.get()));
  }
  auto gt = Make<GroundTruthPtr>("ingest ground truth",
                                 smeval_ground_truth_read_file, cfg.gt.c_str());
  p.aligned = Make<AlignedPtr>(
      "ground-truth association", smeval_associate,
      static_cast<const smeval_trajectory*>(raw.get()),
      static_cast<const smeval_ground_truth*>(gt.get()), cfg.max_dt);
  p.dropped = smeval_aligned_dropped_count(p.aligned.get());
  p.trajectory = Make<TrajectoryPtr>(
      "ground-truth association", smeval_aligned_trajectory,
      static_cast<const smeval_aligned*>(p.aligned.get()));
  return p;
}

AdjacencyPtr GroundTruthReachability(const RunConfig& cfg, const Prepared& p,
                                     AdjacencyPtr* adjacency_out = nullptr) {
  auto a_gt = Make<AdjacencyPtr>(
      "ground-truth adjacency", smeval_ground_truth_adjacency,
      static_cast<const smeval_aligned*>(p.aligned.get()), cfg.eps_dist,
      cfg.eps_rot);
  auto r_gt = Make<AdjacencyPtr>(
      "ground-truth adjacency", smeval_transitive_closure,
      static_cast<const smeval_adjacency*>(a_gt.get()));
  if (adjacency_out != nullptr) *adjacency_out = std::move(a_gt);
  return r_gt;
}

struct Evaluated {
  std::vector<RuleSpec> rules;
  std::vector<CurvePtr> curves;
  Prepared prepared;
};

Evaluated Evaluate(const RunConfig& cfg) {
  Evaluated e;
  e.rules = ResolveRules(cfg);
  const bool vpr = NeedsDescriptors(e.rules);
  e.prepared = Prepare(cfg, vpr);
  const smeval_trajectory* traj = e.prepared.trajectory.get();

  auto s_time = Make<DistancesPtr>("temporal distances",
                                   smeval_temporal_distances, traj);
  DistancesPtr s_vpr;
  if (vpr) {
    s_vpr = Make<DistancesPtr>(
        "descriptor distances", smeval_vpr_distances_streaming,
        static_cast<const smeval_descriptors*>(e.prepared.descriptors.get()),
        traj, MetricOf(cfg.metric));
  }
  auto r_gt = GroundTruthReachability(cfg, e.prepared);
  for (const RuleSpec& rule : e.rules) {
    e.curves.push_back(Make<CurvePtr>(
        "sweep", smeval_sweep, &rule.params,
        static_cast<const smeval_distances*>(s_time.get()),
        static_cast<const smeval_distances*>(s_vpr.get()),
        static_cast<const smeval_adjacency*>(r_gt.get()), traj));
  }
  return e;
}

std::vector<smeval_rule_summary> Summaries(const Evaluated& e) {
  std::vector<smeval_rule_summary> out;
  for (size_t k = 0; k < e.rules.size(); ++k) {
    out.push_back({e.rules[k].name.c_str(), e.rules[k].params,
                   e.curves[k].get()});
  }
  return out;
}

int CmdEval(const RunConfig& cfg) {
  const Evaluated e = Evaluate(cfg);
  const auto summaries = Summaries(e);
  OutputSet outputs(cfg.out);
  for (size_t k = 0; k < e.rules.size(); ++k) {
    outputs.Add("curve_" + e.rules[k].name + ".csv",
                Text("report", smeval_curve_to_csv,
                     static_cast<const smeval_curve*>(e.curves[k].get())));
  }
  const bool vpr = NeedsDescriptors(e.rules);
  smeval_run_info info{};
  info.num_submaps = smeval_trajectory_submap_count(e.prepared.trajectory.get());
  info.num_frames = smeval_trajectory_frame_count(e.prepared.trajectory.get());
  info.dropped_frames = e.prepared.dropped;
  info.metric = vpr ? cfg.metric.c_str() : "";
  info.eps_dist = cfg.eps_dist;
  info.eps_rot_deg = cfg.eps_rot;
  info.max_dt = cfg.max_dt;
  outputs.Add("summary.json",
              Text("report", smeval_summary_json,
                   static_cast<const smeval_rule_summary*>(summaries.data()),
                   summaries.size(),
                   static_cast<const smeval_run_info*>(&info)));
  outputs.Add("pc_curves.svg",
              Text("report", smeval_plot_svg,
                   static_cast<const smeval_rule_summary*>(summaries.data()),
                   summaries.size(), "Precision-coverage"));
  outputs.Commit();
  std::cout << Text("report", smeval_auc_table,
                    static_cast<const smeval_rule_summary*>(summaries.data()),
                    summaries.size());
  return 0;
}

int CmdSweep(const RunConfig& cfg) {
  if (cfg.rules.size() > 1) throw UsageError{"sweep takes a single --rule"};
  const Evaluated e = Evaluate(cfg);
  OutputSet outputs(cfg.out);
  outputs.Add("curve_" + e.rules[0].name + ".csv",
              Text("report", smeval_curve_to_csv,
                   static_cast<const smeval_curve*>(e.curves[0].get())));
  outputs.Commit();
  std::printf("%s AUC %.6f\n", e.rules[0].name.c_str(),
              smeval_curve_auc(e.curves[0].get()));
  return 0;
}

int CmdGt(const RunConfig& cfg) {
  const Prepared p = Prepare(cfg, false);
  AdjacencyPtr a_gt;
  auto r_gt = GroundTruthReachability(cfg, p, &a_gt);
  OutputSet outputs(cfg.out);
  outputs.Add("gt_adjacency.csv",
              Text("report", smeval_adjacency_to_csv,
                   static_cast<const smeval_adjacency*>(a_gt.get()), "gt",
                   cfg.eps_dist));
  outputs.Add("gt_reachability.csv",
              Text("report", smeval_adjacency_to_csv,
                   static_cast<const smeval_adjacency*>(r_gt.get()), "gt",
                   cfg.eps_dist));
  outputs.Commit();
  std::printf("M=%zu dropped=%zu\n", smeval_adjacency_size(a_gt.get()),
              p.dropped);
  return 0;
}

int CmdDistmat(const RunConfig& cfg) {
  auto traj = Make<TrajectoryPtr>("ingest trajectory",
                                  smeval_trajectory_read_file,
                                  cfg.trajectory.c_str());
  OutputSet outputs(cfg.out);
  auto s_time = Make<DistancesPtr>(
      "temporal distances", smeval_temporal_distances,
      static_cast<const smeval_trajectory*>(traj.get()));
  outputs.Add("s_time.csv",
              Text("report", smeval_distances_to_csv,
                   static_cast<const smeval_distances*>(s_time.get())));
  if (!cfg.descriptors.empty()) {
    auto descs = Make<DescriptorsPtr>("ingest descriptors",
                                      smeval_descriptors_read_file,
                                      cfg.descriptors.c_str());
    auto bound = Make<TrajectoryPtr>(
        "ingest descriptors", smeval_trajectory_attach_descriptors,
        static_cast<const smeval_trajectory*>(traj.get()),
        static_cast<const smeval_descriptors*>(descs.get()));
    auto s_vpr = Make<DistancesPtr>(
        "descriptor distances", smeval_vpr_distances_streaming,
        static_cast<const smeval_descriptors*>(descs.get()),
        static_cast<const smeval_trajectory*>(bound.get()),
        MetricOf(cfg.metric));
    outputs.Add("s_vpr.csv",
                Text("report", smeval_distances_to_csv,
                     static_cast<const smeval_distances*>(s_vpr.get())));
  }
  outputs.Commit();
  return 0;
}

int CmdFramePr(const RunConfig& cfg) {
  const Prepared p = Prepare(cfg, true);
  auto fdm = Make<FrameDistancesPtr>(
      "descriptor distances", smeval_frame_distances_compute,
      static_cast<const smeval_descriptors*>(p.descriptors.get()),
      MetricOf(cfg.metric), cfg.threads);
  auto pr = Make<FramePrPtr>(
      "frame precision-recall", smeval_frame_precision_recall,
      static_cast<const smeval_frame_distances*>(fdm.get()),
      static_cast<const smeval_aligned*>(p.aligned.get()), cfg.eps_dist,
      cfg.eps_rot, cfg.min_sep);
  OutputSet outputs(cfg.out);
  outputs.Add("frame_pr.csv",
              Text("report", smeval_frame_pr_to_csv,
                   static_cast<const smeval_frame_pr*>(pr.get())));
  outputs.Commit();
  return 0;
}

int CmdSynth(const smeval_world_config& wc, const std::string& out_dir) {
  auto world = Make<WorldPtr>("synthesis", smeval_world_generate, &wc);
  const smeval_world* w = world.get();
  auto traj = Make<TrajectoryPtr>("synthesis", smeval_world_trajectory, w);
  auto descs = Make<DescriptorsPtr>("synthesis", smeval_world_descriptors, w);
  auto gt = Make<GroundTruthPtr>("synthesis", smeval_world_ground_truth, w);

  OutputSet outputs(out_dir);
  outputs.Add("trajectory.txt",
              Text("report", smeval_trajectory_to_text,
                   static_cast<const smeval_trajectory*>(traj.get())));
  char* bytes = nullptr;
  size_t len = 0;
  Check("report", smeval_descriptors_to_bytes(descs.get(), &bytes, &len));
  outputs.Add("descriptors.vprd", std::string(bytes, len));
  smeval_string_free(bytes);
  outputs.Add("groundtruth.txt",
              Text("report", smeval_ground_truth_to_text,
                   static_cast<const smeval_ground_truth*>(gt.get())));
  outputs.Add("truth.json", Text("report", smeval_world_truth_json, w));
  outputs.Commit();
  std::printf("M=%zu N=%zu\n", smeval_trajectory_submap_count(traj.get()),
              smeval_trajectory_frame_count(traj.get()));
  return 0;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StageError{"ingest curve", "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int CmdReport(const std::vector<std::string>& curve_paths,
              const std::string& out_dir) {
  std::vector<std::string> names;
  std::vector<CurvePtr> curves;
  std::vector<smeval_rule_summary> summaries;
  for (const std::string& path : curve_paths) {
    std::string name = fs::path(path).stem().string();
    if (name.rfind("curve_", 0) == 0) name = name.substr(6);
    const std::string text = ReadFile(path);
    curves.push_back(Make<CurvePtr>("ingest curve", smeval_curve_from_csv,
                                    text.c_str(), text.size()));
    names.push_back(name);
  }
  for (size_t k = 0; k < names.size(); ++k) {
    smeval_rule_params params{SMEVAL_RULE_COMBINED, 0.0, 0.0, 0.0};
    if (smeval_rule_preset(names[k].c_str(), &params) != SMEVAL_OK) {
      params = {SMEVAL_RULE_COMBINED, 0.0, 0.0, 0.0};
    }
    summaries.push_back({names[k].c_str(), params, curves[k].get()});
  }
  OutputSet outputs(out_dir);
  const std::string table =
      Text("report", smeval_auc_table,
           static_cast<const smeval_rule_summary*>(summaries.data()),
           summaries.size());
  outputs.Add("auc_table.md", table);
  outputs.Add("pc_curves.svg",
              Text("report", smeval_plot_svg,
                   static_cast<const smeval_rule_summary*>(summaries.data()),
                   summaries.size(), "Precision-coverage"));
  outputs.Commit();
  std::cout << table;
  return 0;
}

void AddInputs(CLI::App* cmd, RunConfig& cfg, bool descriptors_required) {
  cmd->add_option("--trajectory", cfg.trajectory, "SLAM trajectory text file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* d = cmd->add_option("--descriptors", cfg.descriptors,
                            "binary descriptor file");
  if (descriptors_required) d->required();
}

void AddGroundTruth(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--gt", cfg.gt, "TUM ground-truth file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--eps-dist", cfg.eps_dist, "ground-truth distance (m)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps-rot", cfg.eps_rot, "ground-truth rotation (deg)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-dt", cfg.max_dt, "association tolerance (s)")
      ->check(CLI::PositiveNumber);
}

void AddMetric(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--metric", cfg.metric, "descriptor distance")
      ->check(CLI::IsMember({"cosine", "euclidean"}));
}

void AddRules(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--rule", cfg.rules, "merge rule (repeatable)")
      ->check(CLI::IsMember({"time", "vpr", "comb1", "comb2", "custom"}))
      ->delimiter(',');
  cmd->add_option("--tau-time", cfg.tau_time, "custom rule tau_time (s)");
  cmd->add_option("--f-time", cfg.f_time, "custom rule f_time");
  cmd->add_option("--f-vpr", cfg.f_vpr, "custom rule f_vpr");
}

void AddConfig(CLI::App* cmd) {
  // Consumed by ExpandConfig before parsing.
  cmd->add_option("--config", "flat key=value file of flag values");
}

void AddCommon(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out, "output directory");
  AddConfig(cmd);
}

// Appends `--key=value` for every config-file entry whose flag is absent
// from the command line, so explicit flags take precedence.
std::vector<std::string> ExpandConfig(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string path;
  for (size_t k = 1; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) path = args[k + 1];
    if (args[k].rfind("--config=", 0) == 0) path = args[k].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot open config file " + path};
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  auto given = [&args](const std::string& flag) {
    for (size_t k = 1; k < args.size(); ++k) {
      if (args[k] == flag || args[k].rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> extra;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError{path + ":" + std::to_string(line_no) +
                       ": expected key=value"};
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    const std::string flag = "--" + key;
    if (key == "config" || given(flag)) continue;
    extra.push_back(flag + "=" + trim(line.substr(eq + 1)));
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submap-merging evaluation for multimap visual SLAM", "smeval"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(smeval_version()));

  RunConfig cfg;
  smeval_world_config world_cfg;
  smeval_world_config_default(&world_cfg);
  std::string synth_out = ".";
  std::vector<std::string> report_curves;
  std::string report_out = ".";

  auto* eval = app.add_subcommand("eval", "evaluate merge rules end to end");
  AddInputs(eval, cfg, false);
  AddGroundTruth(eval, cfg);
  AddRules(eval, cfg);
  AddMetric(eval, cfg);
  AddCommon(eval, cfg);

  auto* sweep = app.add_subcommand("sweep", "precision-coverage curve of one rule");
  AddInputs(sweep, cfg, false);
  AddGroundTruth(sweep, cfg);
  AddRules(sweep, cfg);
  AddMetric(sweep, cfg);
  AddCommon(sweep, cfg);

  auto* gt = app.add_subcommand("gt", "ground-truth adjacency and reachability");
  AddInputs(gt, cfg, false);
  AddGroundTruth(gt, cfg);
  AddCommon(gt, cfg);

  auto* distmat = app.add_subcommand("distmat", "submap distance matrices");
  AddInputs(distmat, cfg, false);
  AddMetric(distmat, cfg);
  AddCommon(distmat, cfg);

  auto* framepr = app.add_subcommand("framepr", "frame-level precision-recall");
  AddInputs(framepr, cfg, true);
  AddGroundTruth(framepr, cfg);
  AddMetric(framepr, cfg);
  framepr->add_option("--min-sep", cfg.min_sep,
                      "minimum time separation of query and match (s)");
  framepr->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
  AddCommon(framepr, cfg);

  auto* synth = app.add_subcommand("synth", "generate a synthetic world");
  synth->add_option("--seed", world_cfg.rng_seed, "RNG seed");
  synth->add_option("--places", world_cfg.num_places, "corridor length");
  synth->add_option("--submaps", world_cfg.num_submaps, "number of submaps");
  synth->add_option("--frames-min", world_cfg.frames_per_submap_min,
                    "fewest frames per submap");
  synth->add_option("--frames-max", world_cfg.frames_per_submap_max,
                    "most frames per submap");
  synth->add_option("--revisit", world_cfg.revisit_probability,
                    "revisit probability");
  synth->add_option("--dim", world_cfg.descriptor_dim, "descriptor dimension");
  synth->add_option("--sigma", world_cfg.descriptor_noise_sigma,
                    "per-component descriptor noise");
  synth->add_option("--gap-min", world_cfg.dropout_gap_min, "dropout gap (s)");
  synth->add_option("--gap-max", world_cfg.dropout_gap_max, "dropout gap (s)");
  synth->add_option("--period", world_cfg.frame_period, "frame period (s)");
  synth->add_option("--out", synth_out, "output directory");
  AddConfig(synth);

  auto* report = app.add_subcommand("report", "plot and tabulate curve CSVs");
  report->add_option("--curve", report_curves, "curve CSV (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--out", report_out, "output directory");
  AddConfig(report);

  try {
    std::vector<std::string> args = ExpandConfig(argc, argv);
    std::reverse(args.begin(), args.end());
    args.pop_back();
    app.parse(std::move(args));
  } catch (const UsageError& e) {
    std::cerr << "smeval: " << e.message << '\n';
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return CmdEval(cfg);
    if (*sweep) return CmdSweep(cfg);
    if (*gt) return CmdGt(cfg);
    if (*distmat) return CmdDistmat(cfg);
    if (*framepr) return CmdFramePr(cfg);
    if (*synth) return CmdSynth(world_cfg, synth_out);
    if (*report) return CmdReport(report_curves, report_out);
  } catch (const UsageError& e) {
    std::cerr << "smeval: " << e.message << '\n';
    return 2;
  } catch (const StageError& e) {
    std::cerr << "smeval: " << e.stage << " failed: " << e.message << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "smeval: internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
