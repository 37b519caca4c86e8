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

#include "nodeldp/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "nodeldp/crypto.h"
#include "nodeldp/selection.h"
#include "nodeldp/synthetic.h"

namespace nodeldp {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(12);
  o << v;
  return o.str();
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void hash_mix(uint64_t& h, const std::string& field) {
  for (unsigned char c : field) {
    h ^= c;
    h *= 1099511628211ULL;  // FNV-1a
  }
  h ^= '|';
  h *= 1099511628211ULL;
}

std::string method_string(const RunConfig& cfg) {
  return std::string(selection_method_name(cfg.selection)) + "-" +
         projection_method_name(cfg.projection);
}

}  // namespace

std::string config_hash(const RunConfig& cfg) {
  uint64_t h = 1469598103934665603ULL;
  hash_mix(h, cfg.dataset_path);
  hash_mix(h, method_string(cfg));
  hash_mix(h, fmt(cfg.eps_total));
  hash_mix(h, fmt(cfg.alpha));
  hash_mix(h, std::to_string(cfg.K));
  hash_mix(h, std::to_string(cfg.seed));
  hash_mix(h, cfg.deterministic ? "det" : "rand");
  hash_mix(h, cfg.fixed_theta ? std::to_string(*cfg.fixed_theta) : "auto");
  hash_mix(h, cfg.clamp_published ? "clamp" : "drop");
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> manifest_preamble(const RunConfig& cfg,
                                           const RunResult& result) {
  return {
      "method=" + method_string(cfg),
      "eps_total=" + fmt(cfg.eps_total),
      "alpha=" + fmt(cfg.alpha),
      "K=" + std::to_string(cfg.K),
      "seed=" + std::to_string(cfg.seed),
      "theta=" + std::to_string(result.theta),
      "config_hash=" + config_hash(cfg),
  };
}

namespace {

json metrics_json(const RunMetrics& m) {
  return {{"mse_noisy", m.mse_noisy},
          {"mae_noisy", m.mae_noisy},
          {"mse_projected", m.mse_projected},
          {"mae_projected", m.mae_projected}};
}

json timings_json(const PhaseTimings& t) {
  return {{"select_s", t.select_s},
          {"project_s", t.project_s},
          {"publish_s", t.publish_s},
          {"total_s", t.total_s}};
}

}  // namespace

void emit_run_outputs(const RunConfig& cfg, const RunResult& result,
                      const std::string& out_dir) {
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  const auto preamble = manifest_preamble(cfg, result);

  const BudgetSplit split = split_budget(cfg.eps_total, cfg.alpha, cfg.K);
  json manifest = {
      {"config",
       {{"dataset", cfg.dataset_path},
        {"method", method_string(cfg)},
        {"eps_total", cfg.eps_total},
        {"alpha", cfg.alpha},
        {"K", cfg.K},
        {"seed", cfg.seed},
        {"deterministic", cfg.deterministic},
        {"fixed_theta",
         cfg.fixed_theta ? json(*cfg.fixed_theta) : json(nullptr)},
        {"clamp_published", cfg.clamp_published}}},
      {"config_hash", config_hash(cfg)},
      {"budget",
       {{"eps1", split.eps1}, {"eps2", split.eps2}, {"eps3", split.eps3}}},
      {"accounting",
       {{"amortized_total", result.accounting.amortized_total},
        {"composed_total", result.accounting.composed_total}}},
      {"theta", result.theta},
      {"metrics", metrics_json(result.metrics)},
      {"timings", timings_json(result.timings)},
      {"trace_events", result.trace.size()},
      {"deleted_edges", result.deleted_edges.size()},
  };
  open_out(dir / "manifest.json") << manifest.dump(2) << "\n";

  write_histogram_csv((dir / "true_histogram.csv").string(), result.true_hist,
                      preamble);
  write_histogram_csv((dir / "noisy_histogram.csv").string(),
                      result.noisy_hist, preamble);
  write_distribution_csv((dir / "distribution.csv").string(),
                         result.noisy_dist, preamble);

  {
    auto out = open_out(dir / "projected.csv");
    for (const auto& line : preamble) out << "# " << line << "\n";
    out << "user,degree,projected_degree\n";
    for (std::size_t i = 0; i < result.projected_degrees.size(); ++i) {
      const int before = i < result.true_degrees.size()
                             ? result.true_degrees[i]
                             : result.projected_degrees[i];
      out << i << "," << before << "," << result.projected_degrees[i] << "\n";
    }
  }
  {
    auto out = open_out(dir / "noisy_degrees.csv");
    for (const auto& line : preamble) out << "# " << line << "\n";
    out << "user,noisy_degree\n";
    for (std::size_t i = 0; i < result.noisy_degrees.size(); ++i) {
      out << i << "," << fmt(result.noisy_degrees[i]) << "\n";
    }
  }
  {
    auto out = open_out(dir / "deleted_edges.csv");
    for (const auto& line : preamble) out << "# " << line << "\n";
    out << "u,v\n";
    for (const auto& [u, v] : result.deleted_edges) {
      out << u << "," << v << "\n";
    }
  }
  if (!result.selection.per_k.empty()) {
    auto out = open_out(dir / "per_k.csv");
    for (const auto& line : preamble) out << "# " << line << "\n";
    out << "k,projection_loss,publishing_loss,objective,selected\n";
    for (const auto& row : result.selection.per_k) {
      out << row.k << "," << fmt(row.e_p) << "," << fmt(row.e_d) << ","
          << fmt(row.f) << "," << (row.selected ? 1 : 0) << "\n";
    }
  }
  if (!result.selection.aggregates.empty()) {
    auto out = open_out(dir / "aggregates.csv");
    for (const auto& line : preamble) out << "# " << line << "\n";
    out << "k,aggregate\n";
    for (const auto& [k, agg] : result.selection.aggregates) {
      out << k << "," << agg << "\n";
    }
  }
  result.trace.write_jsonl((dir / "trace.jsonl").string());
}

PreprocessStats cmd_preprocess(const std::string& input_path,
                               const std::string& output_path) {
  PreprocessStats stats;
  Graph g = load_edge_list(input_path, &stats.load);

  std::vector<std::pair<long long, long long>> edges;
  edges.reserve(g.edge_count());
  for (int i = 0; i < g.n; ++i) {
    for (int j : g.adjacency[i]) {
      if (i < j) {
        long long a = g.original_ids[i], b = g.original_ids[j];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
      }
    }
  }
  std::sort(edges.begin(), edges.end());

  const fs::path out_path(output_path);
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  auto out = open_out(out_path);
  out << "# canonical undirected edge list\n";
  out << "# nodes=" << g.n << " edges=" << edges.size()
      << " dropped_self_loops=" << stats.load.self_loops
      << " collapsed_duplicates=" << stats.load.duplicates << "\n";
  for (const auto& [a, b] : edges) out << a << " " << b << "\n";
  stats.output_path = output_path;
  return stats;
}

namespace {

struct CellSpec {
  RunConfig cfg;
  std::string method;
};

SweepCellResult run_cell(const CellSpec& cell, const Graph& g,
                         const fs::path& cells_dir) {
  SweepCellResult r;
  r.method = cell.method;
  r.eps = cell.cfg.eps_total;
  r.alpha = cell.cfg.alpha;
  r.seed = cell.cfg.seed;
  r.hash = config_hash(cell.cfg);

  const fs::path cell_file = cells_dir / (r.hash + ".json");
  if (fs::exists(cell_file)) {
    try {
      std::ifstream in(cell_file);
      json j = json::parse(in);
      if (j.value("ok", false)) {
        r.ok = true;
        r.resumed = true;
        r.theta = j.value("theta", 0);
        const json& m = j.at("metrics");
        r.metrics.mse_noisy = m.value("mse_noisy", 0.0);
        r.metrics.mae_noisy = m.value("mae_noisy", 0.0);
        r.metrics.mse_projected = m.value("mse_projected", 0.0);
        r.metrics.mae_projected = m.value("mae_projected", 0.0);
        const json& t = j.at("timings");
        r.timings.select_s = t.value("select_s", 0.0);
        r.timings.project_s = t.value("project_s", 0.0);
        r.timings.publish_s = t.value("publish_s", 0.0);
        r.timings.total_s = t.value("total_s", 0.0);
        return r;
      }
    } catch (const std::exception&) {
      // Unreadable cell file: fall through and recompute it.
    }
  }

  try {
    RunResult run = run_pipeline(cell.cfg, g);
    r.ok = true;
    r.theta = run.theta;
    r.metrics = run.metrics;
    r.timings = run.timings;
  } catch (const std::exception& e) {
    r.ok = false;
    r.error = e.what();
  }

  json j = {{"hash", r.hash},       {"method", r.method},
            {"eps", r.eps},         {"alpha", r.alpha},
            {"seed", r.seed},       {"ok", r.ok},
            {"error", r.error},     {"theta", r.theta},
            {"metrics", metrics_json(r.metrics)},
            {"timings", timings_json(r.timings)}};
  open_out(cell_file) << j.dump(2) << "\n";
  return r;
}

struct CellAggregate {
  long long reps = 0;
  double sum_theta = 0;
  double sum_mse = 0, sum_sq_mse = 0;
  double sum_mae = 0;
  double sum_select = 0, sum_project = 0, sum_publish = 0, sum_total = 0;
};

}  // namespace

SweepSummary cmd_sweep(const ExperimentSpec& spec, const Graph& g, int jobs) {
  if (spec.methods.empty() || spec.eps_list.empty() ||
      spec.alpha_list.empty() || spec.repetitions < 1) {
    throw std::invalid_argument("cmd_sweep: empty experiment grid");
  }
  if (spec.out_dir.empty()) {
    throw std::invalid_argument("cmd_sweep: out_dir is required");
  }
  const fs::path dir(spec.out_dir);
  const fs::path cells_dir = dir / "cells";
  fs::create_directories(cells_dir);

  std::vector<CellSpec> cells;
  for (const auto& [sel, proj] : spec.methods) {
    for (double eps : spec.eps_list) {
      for (double alpha : spec.alpha_list) {
        for (int rep = 0; rep < spec.repetitions; ++rep) {
          CellSpec cell;
          cell.cfg = spec.base;
          cell.cfg.selection = sel;
          cell.cfg.projection = proj;
          cell.cfg.eps_total = eps;
          cell.cfg.alpha = alpha;
          cell.cfg.seed = spec.base.seed + static_cast<uint64_t>(rep);
          cell.method = method_string(cell.cfg);
          cells.push_back(std::move(cell));
        }
      }
    }
  }

  SweepSummary summary;
  summary.cells.resize(cells.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::clamp(
      jobs, 1, static_cast<int>(std::thread::hardware_concurrency() + 1));
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      summary.cells[i] = run_cell(cells[i], g, cells_dir);
    }
  };
  if (workers <= 1 || cells.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (const auto& cell : summary.cells) {
    if (!cell.ok) {
      ++summary.failed;
    } else if (cell.resumed) {
      ++summary.skipped;
    } else {
      ++summary.executed;
    }
  }

  {
    auto out = open_out(dir / "detail.csv");
    out << "method,eps,alpha,seed,hash,ok,resumed,theta,mse_noisy,mae_noisy,"
           "mse_projected,mae_projected,select_s,project_s,publish_s,total_s,"
           "error\n";
    for (const auto& c : summary.cells) {
      std::string error = c.error;
      std::replace(error.begin(), error.end(), ',', ';');
      std::replace(error.begin(), error.end(), '\n', ' ');
      out << c.method << "," << fmt(c.eps) << "," << fmt(c.alpha) << ","
          << c.seed << "," << c.hash << "," << c.ok << "," << c.resumed << ","
          << c.theta << "," << fmt(c.metrics.mse_noisy) << ","
          << fmt(c.metrics.mae_noisy) << "," << fmt(c.metrics.mse_projected)
          << "," << fmt(c.metrics.mae_projected) << ","
          << fmt(c.timings.select_s) << "," << fmt(c.timings.project_s) << ","
          << fmt(c.timings.publish_s) << "," << fmt(c.timings.total_s) << ","
          << error << "\n";
    }
  }

  // Group completed cells by (method, eps, alpha) in grid order.
  auto summary_out = open_out(dir / "summary.csv");
  summary_out << "method,eps,alpha,reps,mean_theta,mean_mse,std_mse,mean_mae\n";
  auto runtime_out = open_out(dir / "runtime.csv");
  runtime_out << "method,eps,alpha,reps,mean_select_s,mean_project_s,"
                 "mean_publish_s,mean_total_s\n";
  auto best_out = open_out(dir / "best_alpha.csv");
  best_out << "method,eps,best_alpha,mean_mse\n";
  for (const auto& [sel, proj] : spec.methods) {
    RunConfig probe = spec.base;
    probe.selection = sel;
    probe.projection = proj;
    const std::string method = method_string(probe);
    for (double eps : spec.eps_list) {
      double best_alpha = 0, best_mse = 0;
      bool have_best = false;
      for (double alpha : spec.alpha_list) {
        CellAggregate agg;
        for (const auto& c : summary.cells) {
          if (!c.ok || c.method != method || c.eps != eps ||
              c.alpha != alpha) {
            continue;
          }
          ++agg.reps;
          agg.sum_theta += c.theta;
          agg.sum_mse += c.metrics.mse_noisy;
          agg.sum_sq_mse += c.metrics.mse_noisy * c.metrics.mse_noisy;
          agg.sum_mae += c.metrics.mae_noisy;
          agg.sum_select += c.timings.select_s;
          agg.sum_project += c.timings.project_s;
          agg.sum_publish += c.timings.publish_s;
          agg.sum_total += c.timings.total_s;
        }
        if (agg.reps == 0) continue;
        const double inv = 1.0 / static_cast<double>(agg.reps);
        const double mean_mse = agg.sum_mse * inv;
        const double var =
            std::max(0.0, agg.sum_sq_mse * inv - mean_mse * mean_mse);
        summary_out << method << "," << fmt(eps) << "," << fmt(alpha) << ","
                    << agg.reps << "," << fmt(agg.sum_theta * inv) << ","
                    << fmt(mean_mse) << "," << fmt(std::sqrt(var)) << ","
                    << fmt(agg.sum_mae * inv) << "\n";
        runtime_out << method << "," << fmt(eps) << "," << fmt(alpha) << ","
                    << agg.reps << "," << fmt(agg.sum_select * inv) << ","
                    << fmt(agg.sum_project * inv) << ","
                    << fmt(agg.sum_publish * inv) << ","
                    << fmt(agg.sum_total * inv) << "\n";
        if (!have_best || mean_mse < best_mse) {
          have_best = true;
          best_mse = mean_mse;
          best_alpha = alpha;
        }
      }
      if (have_best) {
        best_out << method << "," << fmt(eps) << "," << fmt(best_alpha) << ","
                 << fmt(best_mse) << "\n";
      }
    }
  }
  return summary;
}

SweepSummary cmd_sweep(const ExperimentSpec& spec, int jobs) {
  if (spec.base.dataset_path.empty()) {
    throw std::invalid_argument("cmd_sweep: no dataset path given");
  }
  Graph g = load_edge_list(spec.base.dataset_path);
  return cmd_sweep(spec, g, jobs);
}

namespace {

volatile uint64_t bench_sink;  // defeats dead-code elimination

using BenchClock = std::chrono::steady_clock;

template <typename F>
double time_once(F&& f) {
  const auto t0 = BenchClock::now();
  f();
  return std::chrono::duration<double>(BenchClock::now() - t0).count();
}

// Per-call seconds; fast bodies are repeated until the measurement
// window is long enough to trust.
template <typename F>
double time_adaptive(F&& f) {
  const double once = time_once(f);
  if (once >= 0.04) return once;
  long long reps =
      static_cast<long long>(std::ceil(0.04 / std::max(once, 1e-8)));
  reps = std::min(reps, 400000LL);
  const auto t0 = BenchClock::now();
  for (long long r = 0; r < reps; ++r) f();
  const double total =
      std::chrono::duration<double>(BenchClock::now() - t0).count();
  return total / static_cast<double>(reps);
}

}  // namespace

BenchReport cmd_bench(const std::vector<int>& sizes, int K, uint64_t seed,
                      const std::string& out_dir) {
  if (sizes.empty()) throw std::invalid_argument("cmd_bench: no sizes");
  if (K < 1) throw std::invalid_argument("cmd_bench: K must be >= 1");

  BenchReport report;
  const Substreams subs(seed);
  constexpr int kTheta = 5;
  for (int n : sizes) {
    if (n < 8) throw std::invalid_argument("cmd_bench: sizes must be >= 8");
    auto gen_rng = subs.stream(StreamPurpose::kSynthetic, n);
    const Graph g =
        power_law_graph(n, 2.5, 1, std::min(60, n - 1), gen_rng);
    const std::vector<int> degrees = g.degrees();

    BenchSizeReport row;
    row.n = n;
    row.edges = g.edge_count();

    row.node_project_s = time_adaptive([&] {
      uint64_t acc = 0;
      for (int d : degrees) acc += node_level_project(d, kTheta);
      bench_sink = acc;
    });

    row.edge_project_s = time_adaptive([&] {
      Graph work = g;
      auto out = edge_level_project(work, kTheta, 1.0, subs,
                                    ProjectionMode::kRandomized, nullptr);
      bench_sink = out.deleted_edges.size();
    });

    const BudgetSplit split = split_budget(1.0, 0.5, std::min(K, n - 2));
    row.plain_select_s = time_adaptive([&] {
      auto out = pureldp_select(g, split, subs, true, nullptr);
      bench_sink = static_cast<uint64_t>(out.theta);
    });

    row.crypto_setup_s = time_adaptive([&] {
      auto rng = subs.stream(StreamPurpose::kSeedDealing, n);
      const PairwiseSeeds seeds = PairwiseSeeds::deal(n, rng);
      uint64_t acc = 0;
      for (int k = 1; k <= K; ++k) acc ^= round_masks(seeds, k)[0];
      bench_sink = acc;
    });

    report.sizes.push_back(row);
  }

  for (std::size_t i = 1; i < report.sizes.size(); ++i) {
    const auto& prev = report.sizes[i - 1];
    const auto& cur = report.sizes[i];
    report.node_project_exponents.push_back(
        std::log2(cur.node_project_s / prev.node_project_s));
    report.crypto_setup_exponents.push_back(
        std::log2(cur.crypto_setup_s / prev.crypto_setup_s));
  }

  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    auto out = open_out(dir / "bench.csv");
    out << "n,edges,node_project_s,edge_project_s,plain_select_s,"
           "crypto_setup_s\n";
    for (const auto& row : report.sizes) {
      out << row.n << "," << row.edges << "," << fmt(row.node_project_s)
          << "," << fmt(row.edge_project_s) << ","
          << fmt(row.plain_select_s) << "," << fmt(row.crypto_setup_s)
          << "\n";
    }
    auto exp_out = open_out(dir / "exponents.csv");
    exp_out << "doubling,node_project_log2_ratio,crypto_setup_log2_ratio\n";
    for (std::size_t i = 0; i < report.node_project_exponents.size(); ++i) {
      exp_out << report.sizes[i].n << "->" << report.sizes[i + 1].n << ","
              << fmt(report.node_project_exponents[i]) << ","
              << fmt(report.crypto_setup_exponents[i]) << "\n";
    }
  }
  return report;
}

}  // namespace nodeldp
