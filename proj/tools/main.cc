//
// Copyright 2026 The NodeLDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nodeldp/harness.h"
#include "nodeldp/protocol.h"
#include "nodeldp/selection.h"

namespace {

using namespace nodeldp;

uint64_t default_seed() {
  if (const char* env = std::getenv("NODELDP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable NODELDP_SEED\n";
    }
  }
  return 1;
}

void add_budget_options(CLI::App* cmd, RunConfig* cfg) {
  cmd->add_option("--eps", cfg->eps_total, "Total privacy budget")
      ->capture_default_str();
  cmd->add_option("--alpha", cfg->alpha,
                  "Fraction of the budget spent on degree publishing")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9))
      ->capture_default_str();
  cmd->add_option("--K", cfg->K, "Number of candidate parameters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", cfg->seed,
                  "Master seed (default: NODELDP_SEED or 1)")
      ->capture_default_str();
}

void print_run(const RunConfig& cfg, const RunResult& res) {
  std::cout << "method            " << selection_method_name(cfg.selection)
            << "-" << projection_method_name(cfg.projection) << "\n"
            << "theta             " << res.theta << "\n"
            << "mse               " << res.metrics.mse_noisy << "\n"
            << "mae               " << res.metrics.mae_noisy << "\n"
            << "mse_projected     " << res.metrics.mse_projected << "\n"
            << "deleted_edges     " << res.deleted_edges.size() << "\n"
            << "eps_amortized     " << res.accounting.amortized_total << "\n"
            << "eps_composed      " << res.accounting.composed_total << "\n"
            << "seconds           " << res.timings.total_s << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Degree-distribution publishing under node-level local differential "
      "privacy"};
  app.require_subcommand(1);

  // preprocess
  std::string pre_in, pre_out;
  auto* pre = app.add_subcommand(
      "preprocess", "Canonicalize an edge list (dedup, symmetrize)");
  pre->add_option("--input", pre_in, "Raw edge list")->required();
  pre->add_option("--output", pre_out, "Canonical output path")->required();

  // run
  RunConfig run_cfg;
  run_cfg.seed = default_seed();
  std::string run_method = "crypto-edge";
  std::string run_out;
  int run_theta = 0;
  auto* run = app.add_subcommand("run", "One full protocol run");
  run->add_option("--dataset", run_cfg.dataset_path, "Edge-list file")
      ->required();
  run->add_option("--method", run_method,
                  "selection-projection pair: pureldp|crypto - node|edge")
      ->capture_default_str();
  add_budget_options(run, &run_cfg);
  run->add_flag("--deterministic", run_cfg.deterministic,
                "Disable every noise source (replayable oracle run)");
  run->add_option("--theta", run_theta,
                  "Fixed projection parameter; skips selection");
  run->add_flag("--clamp", run_cfg.clamp_published,
                "Clamp out-of-range noisy degrees instead of dropping");
  run->add_option("--out", run_out, "Directory for run outputs");

  // sweep
  ExperimentSpec spec;
  spec.base.seed = default_seed();
  std::vector<std::string> sweep_methods = {"pureldp-node", "crypto-edge"};
  int jobs = 1;
  auto* sweep = app.add_subcommand(
      "sweep", "Grid of runs (methods x eps x alpha x repetitions)");
  sweep->add_option("--dataset", spec.base.dataset_path, "Edge-list file")
      ->required();
  sweep->add_option("--methods", sweep_methods, "Method pairs")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--eps", spec.eps_list, "Budget grid")
      ->delimiter(',')
      ->required();
  sweep->add_option("--alpha", spec.alpha_list, "Publishing-fraction grid")
      ->delimiter(',')
      ->required();
  sweep->add_option("--K", spec.base.K, "Number of candidate parameters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--reps", spec.repetitions,
                    "Repetitions per cell (seeds seed..seed+reps-1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--seed", spec.base.seed, "Master seed of repetition 0")
      ->capture_default_str();
  sweep->add_option("--out", spec.out_dir, "Sweep output directory")
      ->required();
  sweep->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_flag("--clamp", spec.base.clamp_published,
                  "Clamp out-of-range noisy degrees instead of dropping");

  // bench
  std::vector<int> sizes = {1000, 2000, 4000};
  int bench_k = 50;
  uint64_t bench_seed = default_seed();
  std::string bench_out;
  auto* bench =
      app.add_subcommand("bench", "Phase timings on synthetic graphs");
  bench->add_option("--sizes", sizes, "Graph sizes")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--K", bench_k, "Number of candidate parameters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Master seed")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "Directory for bench CSVs");

  // select-theta
  RunConfig sel_cfg;
  sel_cfg.seed = default_seed();
  std::string sel_method = "crypto";
  bool sel_det = false;
  auto* sel = app.add_subcommand("select-theta",
                                 "Run only the parameter-selection protocol");
  sel->add_option("--dataset", sel_cfg.dataset_path, "Edge-list file")
      ->required();
  sel->add_option("--method", sel_method, "pureldp or crypto")
      ->capture_default_str();
  add_budget_options(sel, &sel_cfg);
  sel->add_flag("--deterministic", sel_det, "Disable selection noise");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*pre) {
      PreprocessStats stats = cmd_preprocess(pre_in, pre_out);
      std::cout << "nodes             " << stats.load.nodes << "\n"
                << "undirected_edges  " << stats.load.undirected_edges << "\n"
                << "self_loops        " << stats.load.self_loops << "\n"
                << "duplicates        " << stats.load.duplicates << "\n"
                << "wrote             " << stats.output_path << "\n";
    } else if (*run) {
      parse_method(run_method, &run_cfg.selection, &run_cfg.projection);
      if (run->count("--theta")) run_cfg.fixed_theta = run_theta;
      RunResult res = run_pipeline(run_cfg);
      print_run(run_cfg, res);
      if (!run_out.empty()) {
        emit_run_outputs(run_cfg, res, run_out);
        std::cout << "outputs           " << run_out << "\n";
      }
    } else if (*sweep) {
      for (const std::string& m : sweep_methods) {
        SelectionMethod s;
        ProjectionMethod p;
        parse_method(m, &s, &p);
        spec.methods.emplace_back(s, p);
      }
      SweepSummary summary = cmd_sweep(spec, jobs);
      std::cout << "cells             " << summary.cells.size() << "\n"
                << "executed          " << summary.executed << "\n"
                << "resumed           " << summary.skipped << "\n"
                << "failed            " << summary.failed << "\n"
                << "outputs           " << spec.out_dir << "\n";
      if (summary.failed > 0) {
        for (const auto& c : summary.cells) {
          if (!c.ok) {
            std::cerr << "failed cell " << c.method << " eps=" << c.eps
                      << " alpha=" << c.alpha << " seed=" << c.seed << ": "
                      << c.error << "\n";
          }
        }
        return 1;
      }
    } else if (*bench) {
      BenchReport report = cmd_bench(sizes, bench_k, bench_seed, bench_out);
      std::cout << "n,edges,node_project_s,edge_project_s,plain_select_s,"
                   "crypto_setup_s\n";
      for (const auto& row : report.sizes) {
        std::cout << row.n << "," << row.edges << "," << row.node_project_s
                  << "," << row.edge_project_s << "," << row.plain_select_s
                  << "," << row.crypto_setup_s << "\n";
      }
      for (std::size_t i = 0; i < report.node_project_exponents.size(); ++i) {
        std::cout << "doubling " << report.sizes[i].n << "->"
                  << report.sizes[i + 1].n << ": node_project_log2_ratio="
                  << report.node_project_exponents[i]
                  << " crypto_setup_log2_ratio="
                  << report.crypto_setup_exponents[i] << "\n";
      }
    } else if (*sel) {
      Graph g = load_edge_list(sel_cfg.dataset_path);
      const BudgetSplit split =
          split_budget(sel_cfg.eps_total, sel_cfg.alpha, sel_cfg.K);
      const Substreams subs(sel_cfg.seed);
      SelectionOutcome out;
      if (sel_method == "pureldp") {
        out = pureldp_select(g, split, subs, !sel_det, nullptr);
        std::cout << "k,projection_loss,publishing_loss,objective,selected\n";
        for (const auto& row : out.per_k) {
          std::cout << row.k << "," << row.e_p << "," << row.e_d << ","
                    << row.f << "," << (row.selected ? 1 : 0) << "\n";
        }
      } else if (sel_method == "crypto") {
        out = crypto_select(g, split, subs, nullptr);
        std::cout << "k,aggregate\n";
        for (const auto& [k, agg] : out.aggregates) {
          std::cout << k << "," << agg << "\n";
        }
      } else {
        throw std::invalid_argument("unknown selection method: " + sel_method);
      }
      std::cout << "theta             " << out.theta << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
