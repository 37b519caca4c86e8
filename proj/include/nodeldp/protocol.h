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

#ifndef NODELDP_PROTOCOL_H_
#define NODELDP_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nodeldp/budget.h"
#include "nodeldp/graph.h"
#include "nodeldp/projection.h"
#include "nodeldp/selection.h"
#include "nodeldp/trace.h"

namespace nodeldp {

enum class SelectionMethod { kPureLdp, kCryptoAssisted };
enum class ProjectionMethod { kNodeLevel, kEdgeLevel };

const char* selection_method_name(SelectionMethod m);
const char* projection_method_name(ProjectionMethod m);
// Parses "pureldp-node", "crypto-edge", ... ('+' also accepted).
void parse_method(const std::string& name, SelectionMethod* sel,
                  ProjectionMethod* proj);

// One user's local view: its own adjacency row and nothing else.
struct UserAgent {
  int id = -1;
  std::span<const int> neighbors;
  int degree() const { return static_cast<int>(neighbors.size()); }
};

struct RunConfig {
  std::string dataset_path;  // empty when a graph is passed directly
  SelectionMethod selection = SelectionMethod::kCryptoAssisted;
  ProjectionMethod projection = ProjectionMethod::kEdgeLevel;
  double eps_total = 1.0;
  double alpha = 0.94;
  int K = 50;
  uint64_t seed = 1;
  // Disables every randomized element: selection noise, per-bit
  // randomization (deletion requests become the coordinated noise-free
  // ones), and publishing noise.
  bool deterministic = false;
  std::optional<int> fixed_theta;  // bypasses selection when set
  // Noisy degrees are binned by rounding to the nearest integer;
  // out-of-range values are dropped by default or clamped into
  // [0, n-1] when set.
  bool clamp_published = false;
};

struct RunMetrics {
  double mse_noisy = 0;
  double mae_noisy = 0;
  double mse_projected = 0;
  double mae_projected = 0;
};

struct PhaseTimings {
  double select_s = 0;
  double project_s = 0;
  double publish_s = 0;
  double total_s = 0;
};

struct RunResult {
  int theta = 0;
  SelectionOutcome selection;
  DegreeHistogram true_hist;
  DegreeHistogram projected_hist;  // pre-noise; bins sum to n
  DegreeHistogram noisy_hist;
  DegreeDistribution noisy_dist;
  std::vector<int> true_degrees;
  std::vector<int> projected_degrees;
  std::vector<double> noisy_degrees;  // raw, unrounded
  std::vector<std::pair<int, int>> deleted_edges;
  RunMetrics metrics;
  PhaseTimings timings;
  PrivacyAccount accounting;
  Trace trace;
};

// Full pipeline: select theta (or take the fixed override), project
// locally, publish Laplace(2*theta/eps3)-perturbed degrees, aggregate
// into the noisy histogram and distribution, and score against the true
// histogram. Phase failures propagate with the phase name prefixed.
RunResult run_pipeline(const RunConfig& cfg, const Graph& g);
// Loads cfg.dataset_path first.
RunResult run_pipeline(const RunConfig& cfg);

}  // namespace nodeldp

#endif  // NODELDP_PROTOCOL_H_
