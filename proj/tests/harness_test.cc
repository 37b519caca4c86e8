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

#include <filesystem>
#include <fstream>
#include <set>

#include "gtest/gtest.h"
#include "json.hpp"
#include "testutil.h"

namespace nodeldp {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::TempDir;
using testing::write_file;

TEST(ConfigHash, SensitiveToEveryField) {
  RunConfig base;
  base.dataset_path = "data.txt";
  const std::string h0 = config_hash(base);
  EXPECT_EQ(h0, config_hash(base));  // stable
  EXPECT_EQ(h0.size(), 16u);

  std::set<std::string> hashes = {h0};
  auto insert_variant = [&](RunConfig cfg) {
    EXPECT_TRUE(hashes.insert(config_hash(cfg)).second)
        << "hash collision against a neighbor config";
  };
  RunConfig v = base;
  v.dataset_path = "other.txt";
  insert_variant(v);
  v = base;
  v.selection = SelectionMethod::kPureLdp;
  insert_variant(v);
  v = base;
  v.projection = ProjectionMethod::kNodeLevel;
  insert_variant(v);
  v = base;
  v.eps_total = 2.0;
  insert_variant(v);
  v = base;
  v.alpha = 0.5;
  insert_variant(v);
  v = base;
  v.K = 51;
  insert_variant(v);
  v = base;
  v.seed = 2;
  insert_variant(v);
  v = base;
  v.deterministic = true;
  insert_variant(v);
  v = base;
  v.fixed_theta = 4;
  insert_variant(v);
  v = base;
  v.clamp_published = true;
  insert_variant(v);
}

TEST(EmitRunOutputs, WritesTheFullFileSet) {
  Graph g = testing::five_node_graph();
  RunConfig cfg;
  cfg.selection = SelectionMethod::kPureLdp;
  cfg.projection = ProjectionMethod::kEdgeLevel;
  cfg.eps_total = 2.0;
  cfg.alpha = 0.5;
  cfg.K = 3;
  cfg.seed = 9;
  RunResult res = run_pipeline(cfg, g);

  TempDir dir("harness-emit");
  const std::string out = dir.file("run");
  emit_run_outputs(cfg, res, out);

  for (const char* name :
       {"manifest.json", "true_histogram.csv", "noisy_histogram.csv",
        "distribution.csv", "projected.csv", "noisy_degrees.csv",
        "deleted_edges.csv", "per_k.csv", "trace.jsonl"}) {
    EXPECT_TRUE(fs::exists(fs::path(out) / name)) << name;
  }

  std::ifstream in(fs::path(out) / "manifest.json");
  json manifest = json::parse(in);
  EXPECT_EQ(manifest["config"]["method"], "pureldp-edge");
  EXPECT_EQ(manifest["config"]["K"], 3);
  EXPECT_EQ(manifest["theta"], res.theta);
  EXPECT_EQ(manifest["config_hash"], config_hash(cfg));
  EXPECT_NEAR(manifest["budget"]["eps3"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(manifest["accounting"]["composed_total"].get<double>(), 2.0,
              1e-12);
  EXPECT_TRUE(manifest["metrics"].contains("mse_noisy"));

  // projected.csv pairs every user's original degree with the projected
  // one; on the five-node star user 0 starts at degree 3.
  {
    std::ifstream proj(fs::path(out) / "projected.csv");
    std::string line;
    std::string header;
    std::string first_row;
    while (std::getline(proj, line)) {
      if (!line.empty() && line[0] == '#') continue;
      if (header.empty()) {
        header = line;
      } else {
        first_row = line;
        break;
      }
    }
    EXPECT_EQ(header, "user,degree,projected_degree");
    EXPECT_EQ(first_row.rfind("0,3,", 0), 0u) << first_row;
  }

  // Crypto runs emit the aggregate audit table instead of per_k.
  RunConfig ccfg = cfg;
  ccfg.selection = SelectionMethod::kCryptoAssisted;
  RunResult cres = run_pipeline(ccfg, g);
  const std::string cout_dir = dir.file("crypto-run");
  emit_run_outputs(ccfg, cres, cout_dir);
  EXPECT_TRUE(fs::exists(fs::path(cout_dir) / "aggregates.csv"));
  EXPECT_FALSE(fs::exists(fs::path(cout_dir) / "per_k.csv"));
}

TEST(Preprocess, CanonicalizesAndRoundTrips) {
  TempDir dir("harness-pre");
  const std::string raw = dir.file("raw.txt");
  write_file(raw,
             "# header\n"
             "5 9\n"
             "9 5\n"
             "5 5\n"
             "2 9\n"
             "9 12\n");
  const std::string cooked = dir.file("nested/cooked.txt");
  PreprocessStats stats = cmd_preprocess(raw, cooked);
  EXPECT_EQ(stats.load.self_loops, 1);
  EXPECT_EQ(stats.load.duplicates, 1);
  EXPECT_EQ(stats.load.undirected_edges, 3);
  EXPECT_EQ(stats.output_path, cooked);

  // The canonical file uses original ids, is sorted, and reloads to an
  // identical graph.
  std::ifstream in(cooked);
  std::string line;
  std::vector<std::string> data_lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') data_lines.push_back(line);
  }
  EXPECT_EQ(data_lines,
            (std::vector<std::string>{"2 9", "5 9", "9 12"}));

  LoadStats again;
  Graph g = load_edge_list(cooked, &again);
  EXPECT_EQ(again.duplicates, 0);
  EXPECT_EQ(again.self_loops, 0);
  EXPECT_EQ(g.n, 4);
  EXPECT_EQ(g.edge_count(), 3);
}

ExperimentSpec small_spec(const std::string& out_dir) {
  ExperimentSpec spec;
  spec.base.eps_total = 1.0;
  spec.base.alpha = 0.6;
  spec.base.K = 3;
  spec.base.seed = 100;
  spec.methods = {
      {SelectionMethod::kPureLdp, ProjectionMethod::kNodeLevel},
      {SelectionMethod::kCryptoAssisted, ProjectionMethod::kEdgeLevel}};
  spec.eps_list = {1.0, 2.0};
  spec.alpha_list = {0.6};
  spec.repetitions = 2;
  spec.out_dir = out_dir;
  return spec;
}

TEST(Sweep, RunsGridPersistsCellsAndResumes) {
  std::mt19937 gen(71);
  Graph g = testing::random_graph(30, 0.15, gen);
  TempDir dir("harness-sweep");
  ExperimentSpec spec = small_spec(dir.file("sweep"));

  SweepSummary first = cmd_sweep(spec, g, 2);
  EXPECT_EQ(first.cells.size(), 8u);  // 2 methods x 2 eps x 1 alpha x 2 reps
  EXPECT_EQ(first.executed, 8);
  EXPECT_EQ(first.skipped, 0);
  EXPECT_EQ(first.failed, 0);
  for (const char* name :
       {"detail.csv", "summary.csv", "best_alpha.csv", "runtime.csv"}) {
    EXPECT_TRUE(fs::exists(fs::path(spec.out_dir) / name)) << name;
  }

  // Second pass resumes every cell from disk with identical numbers.
  SweepSummary second = cmd_sweep(spec, g, 2);
  EXPECT_EQ(second.executed, 0);
  EXPECT_EQ(second.skipped, 8);
  for (std::size_t i = 0; i < first.cells.size(); ++i) {
    EXPECT_EQ(first.cells[i].hash, second.cells[i].hash);
    EXPECT_EQ(first.cells[i].theta, second.cells[i].theta);
    EXPECT_DOUBLE_EQ(first.cells[i].metrics.mse_noisy,
                     second.cells[i].metrics.mse_noisy);
    EXPECT_TRUE(second.cells[i].resumed);
  }

  // A corrupted cell file is recomputed, not trusted.
  const fs::path cell_file =
      fs::path(spec.out_dir) / "cells" / (first.cells[0].hash + ".json");
  ASSERT_TRUE(fs::exists(cell_file));
  write_file(cell_file.string(), "{not json");
  SweepSummary third = cmd_sweep(spec, g, 1);
  EXPECT_EQ(third.executed, 1);
  EXPECT_EQ(third.skipped, 7);
  EXPECT_DOUBLE_EQ(third.cells[0].metrics.mse_noisy,
                   first.cells[0].metrics.mse_noisy);
}

TEST(Sweep, RecordsPerCellFailuresAndContinues) {
  std::mt19937 gen(73);
  Graph g = testing::random_graph(10, 0.3, gen);
  TempDir dir("harness-sweep-fail");
  ExperimentSpec spec = small_spec(dir.file("sweep"));
  spec.base.K = 20;  // pureldp requires K <= n - 2 = 8; crypto tolerates it
  spec.repetitions = 1;

  SweepSummary summary = cmd_sweep(spec, g, 2);
  EXPECT_EQ(summary.cells.size(), 4u);
  EXPECT_EQ(summary.failed, 2);
  EXPECT_EQ(summary.executed, 2);
  for (const auto& cell : summary.cells) {
    if (cell.method == "pureldp-node") {
      EXPECT_FALSE(cell.ok);
      EXPECT_NE(cell.error.find("selection"), std::string::npos);
    } else {
      EXPECT_TRUE(cell.ok) << cell.error;
    }
  }

  // detail.csv carries the error strings without breaking the format.
  std::ifstream in(fs::path(spec.out_dir) / "detail.csv");
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 5);  // header + 4 cells
}

TEST(Sweep, ValidatesSpec) {
  Graph g = testing::five_node_graph();
  TempDir dir("harness-sweep-bad");
  ExperimentSpec spec = small_spec(dir.file("s"));
  spec.eps_list.clear();
  EXPECT_THROW(cmd_sweep(spec, g, 1), std::invalid_argument);
  spec = small_spec("");
  EXPECT_THROW(cmd_sweep(spec, g, 1), std::invalid_argument);
}

TEST(Bench, MeasuresSizesAndExponents) {
  TempDir dir("harness-bench");
  BenchReport report = cmd_bench({256, 512}, 4, 3, dir.file("bench"));
  ASSERT_EQ(report.sizes.size(), 2u);
  EXPECT_EQ(report.sizes[0].n, 256);
  EXPECT_EQ(report.sizes[1].n, 512);
  for (const auto& row : report.sizes) {
    EXPECT_GT(row.edges, 0);
    EXPECT_GT(row.node_project_s, 0);
    EXPECT_GT(row.edge_project_s, 0);
    EXPECT_GT(row.plain_select_s, 0);
    EXPECT_GT(row.crypto_setup_s, 0);
  }
  ASSERT_EQ(report.node_project_exponents.size(), 1u);
  ASSERT_EQ(report.crypto_setup_exponents.size(), 1u);
  // Pairwise setup is quadratic: clearly superlinear already here.
  EXPECT_GT(report.crypto_setup_exponents[0], 1.2);
  // Truncation is linear: nowhere near quadratic.
  EXPECT_LT(report.node_project_exponents[0], 1.8);
  EXPECT_TRUE(fs::exists(fs::path(dir.file("bench")) / "bench.csv"));
  EXPECT_TRUE(fs::exists(fs::path(dir.file("bench")) / "exponents.csv"));

  EXPECT_THROW(cmd_bench({}, 4, 3), std::invalid_argument);
  EXPECT_THROW(cmd_bench({100}, 0, 3), std::invalid_argument);
}

}  // namespace
}  // namespace nodeldp
