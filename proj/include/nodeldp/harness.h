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

#ifndef NODELDP_HARNESS_H_
#define NODELDP_HARNESS_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nodeldp/graph.h"
#include "nodeldp/protocol.h"

namespace nodeldp {

// Stable hash of every field that shapes a run's output; keys sweep
// cells and stamps manifests.
std::string config_hash(const RunConfig& cfg);

// Manifest lines embedded as comments at the top of emitted CSV files.
std::vector<std::string> manifest_preamble(const RunConfig& cfg,
                                           const RunResult& result);

// Writes manifest.json, histogram/distribution CSVs, per-user projection
// CSV, deleted edges, raw noisy degrees, the per-candidate table, and
// the trace export into out_dir.
void emit_run_outputs(const RunConfig& cfg, const RunResult& result,
                      const std::string& out_dir);

struct PreprocessStats {
  LoadStats load;
  std::string output_path;
};

// Loads an edge list, symmetrizes and deduplicates it, and writes the
// canonical form (original ids, u < v, sorted) with a commented header.
PreprocessStats cmd_preprocess(const std::string& input_path,
                               const std::string& output_path);

struct ExperimentSpec {
  RunConfig base;                 // seed here is the master seed of rep 0
  std::vector<std::pair<SelectionMethod, ProjectionMethod>> methods;
  std::vector<double> eps_list;
  std::vector<double> alpha_list;
  int repetitions = 1;            // rep r runs with seed base.seed + r
  std::string out_dir;
};

struct SweepCellResult {
  std::string method;
  double eps = 0;
  double alpha = 0;
  uint64_t seed = 0;
  std::string hash;
  bool ok = false;
  bool resumed = false;  // cell file already existed
  std::string error;
  int theta = 0;
  RunMetrics metrics;
  PhaseTimings timings;
};

struct SweepSummary {
  std::vector<SweepCellResult> cells;
  long long executed = 0;
  long long skipped = 0;  // resumed from existing cell files
  long long failed = 0;
};

// Runs the grid (methods x eps x alpha x repetitions) over one dataset
// with a small worker pool. Each cell persists its own result file keyed
// by config hash, so re-running a finished sweep is a no-op; per-cell
// failures are recorded and the sweep continues. Emits detail.csv,
// summary.csv, best_alpha.csv and runtime.csv under spec.out_dir.
SweepSummary cmd_sweep(const ExperimentSpec& spec, const Graph& g,
                       int jobs = 1);
SweepSummary cmd_sweep(const ExperimentSpec& spec, int jobs = 1);

struct BenchSizeReport {
  int n = 0;
  long long edges = 0;
  double node_project_s = 0;   // one full projection pass
  double edge_project_s = 0;
  double plain_select_s = 0;
  double crypto_setup_s = 0;   // seed dealing + per-round mask material
};

struct BenchReport {
  std::vector<BenchSizeReport> sizes;
  // log2 of consecutive-size time ratios, one entry per doubling.
  std::vector<double> node_project_exponents;
  std::vector<double> crypto_setup_exponents;
};

// Times the core phases on synthetic graphs of the given sizes (average
// degree held fixed) and fits growth exponents from the doublings.
BenchReport cmd_bench(const std::vector<int>& sizes, int K, uint64_t seed,
                      const std::string& out_dir = "");

}  // namespace nodeldp

#endif  // NODELDP_HARNESS_H_
