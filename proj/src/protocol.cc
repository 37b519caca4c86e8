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

#include "nodeldp/protocol.h"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace nodeldp {

const char* selection_method_name(SelectionMethod m) {
  return m == SelectionMethod::kPureLdp ? "pureldp" : "crypto";
}

const char* projection_method_name(ProjectionMethod m) {
  return m == ProjectionMethod::kNodeLevel ? "node" : "edge";
}

void parse_method(const std::string& name, SelectionMethod* sel,
                  ProjectionMethod* proj) {
  auto cut = name.find_first_of("-+");
  if (cut == std::string::npos) {
    throw std::invalid_argument(
        "method must look like 'pureldp-node' or 'crypto-edge': " + name);
  }
  const std::string first = name.substr(0, cut);
  const std::string second = name.substr(cut + 1);
  if (first == "pureldp") {
    *sel = SelectionMethod::kPureLdp;
  } else if (first == "crypto") {
    *sel = SelectionMethod::kCryptoAssisted;
  } else {
    throw std::invalid_argument("unknown selection method: " + first);
  }
  if (second == "node") {
    *proj = ProjectionMethod::kNodeLevel;
  } else if (second == "edge") {
    *proj = ProjectionMethod::kEdgeLevel;
  } else {
    throw std::invalid_argument("unknown projection method: " + second);
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

[[noreturn]] void rethrow_phase(const char* phase, const std::exception& e) {
  throw std::runtime_error(std::string(phase) + ": " + e.what());
}

}  // namespace

RunResult run_pipeline(const RunConfig& cfg, const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("run_pipeline: empty graph");
  const auto t_total = Clock::now();

  const BudgetSplit split = split_budget(cfg.eps_total, cfg.alpha, cfg.K);
  const Substreams subs(cfg.seed);

  RunResult res;
  res.accounting = account_privacy(split);
  res.true_hist = degree_histogram(g);
  res.true_degrees = g.degrees();

  // Parameter selection.
  {
    const auto t0 = Clock::now();
    try {
      if (cfg.fixed_theta) {
        if (*cfg.fixed_theta < 1) {
          throw std::invalid_argument("fixed theta must be >= 1");
        }
        res.theta = *cfg.fixed_theta;
        res.selection.theta = res.theta;
        TraceEvent ev;
        ev.event = "theta";
        ev.actor = ActorRole::kHarness;
        ev.tag = PayloadTag::kTheta;
        ev.num = res.theta;
        ev.server_visible = true;
        ev.payload_size = 1;
        res.trace.append(std::move(ev));
      } else if (cfg.selection == SelectionMethod::kPureLdp) {
        res.selection =
            pureldp_select(g, split, subs, !cfg.deterministic, &res.trace);
        res.theta = res.selection.theta;
      } else {
        res.selection = crypto_select(g, split, subs, &res.trace);
        res.theta = res.selection.theta;
      }
    } catch (const std::exception& e) {
      rethrow_phase("selection", e);
    }
    res.timings.select_s = seconds_since(t0);
  }

  // Local projection.
  Graph work = g;
  {
    const auto t0 = Clock::now();
    try {
      if (cfg.projection == ProjectionMethod::kNodeLevel) {
        res.projected_degrees.reserve(g.n);
        for (int i = 0; i < g.n; ++i) {
          UserAgent user{i, std::span<const int>(work.adjacency[i])};
          res.projected_degrees.push_back(
              node_level_project(user.degree(), res.theta));
        }
      } else {
        const ProjectionMode mode = cfg.deterministic
                                        ? ProjectionMode::kDeterministic
                                        : ProjectionMode::kRandomized;
        ProjectionOutcome out =
            edge_level_project(work, res.theta, split.eps2, subs, mode,
                               &res.trace);
        res.projected_degrees = std::move(out.projected_degree);
        res.deleted_edges = std::move(out.deleted_edges);
      }
      res.projected_hist = histogram_of_degrees(res.projected_degrees, g.n);
    } catch (const std::exception& e) {
      rethrow_phase("projection", e);
    }
    res.timings.project_s = seconds_since(t0);
  }

  // Degree publishing and aggregation.
  {
    const auto t0 = Clock::now();
    try {
      const double scale = publishing_scale(res.theta, split.eps3);
      res.noisy_degrees.reserve(g.n);
      for (int i = 0; i < g.n; ++i) {
        const double raw = res.projected_degrees[i];
        {
          TraceEvent ev;
          ev.event = "raw_degree";
          ev.actor = ActorRole::kUser;
          ev.tag = PayloadTag::kRawDegree;
          ev.num = raw;
          ev.server_visible = false;
          ev.payload_size = 1;
          res.trace.append(std::move(ev));
        }
        double noisy = raw;
        if (!cfg.deterministic) {
          auto rng = subs.stream(StreamPurpose::kPublishNoise, i);
          noisy += laplace_sample(scale, rng);
        }
        {
          TraceEvent ev;
          ev.event = "noisy_degree";
          ev.actor = ActorRole::kUser;
          ev.tag = PayloadTag::kNoisyDegree;
          ev.num = noisy;
          ev.server_visible = true;
          ev.payload_size = 1;
          res.trace.append(std::move(ev));
        }
        res.noisy_degrees.push_back(noisy);
      }

      // Server aggregation: round each report to the nearest integer
      // bin; out-of-range reports are dropped unless clamping is on.
      res.noisy_hist.bins.assign(g.n, 0.0);
      for (double value : res.noisy_degrees) {
        if (!std::isfinite(value)) continue;
        long long bin = std::llround(value);
        if (bin < 0 || bin >= g.n) {
          if (!cfg.clamp_published) continue;
          bin = bin < 0 ? 0 : g.n - 1;
        }
        res.noisy_hist.bins[static_cast<std::size_t>(bin)] += 1.0;
      }
      res.noisy_dist = to_distribution(res.noisy_hist);

      res.metrics.mse_noisy = mse(res.true_hist, res.noisy_hist);
      res.metrics.mae_noisy = mae(res.true_hist, res.noisy_hist);
      res.metrics.mse_projected = mse(res.true_hist, res.projected_hist);
      res.metrics.mae_projected = mae(res.true_hist, res.projected_hist);
    } catch (const std::exception& e) {
      rethrow_phase("publishing", e);
    }
    res.timings.publish_s = seconds_since(t0);
  }

  res.timings.total_s = seconds_since(t_total);
  return res;
}

RunResult run_pipeline(const RunConfig& cfg) {
  if (cfg.dataset_path.empty()) {
    throw std::invalid_argument("run_pipeline: no dataset path given");
  }
  Graph g = load_edge_list(cfg.dataset_path);
  return run_pipeline(cfg, g);
}

}  // namespace nodeldp
