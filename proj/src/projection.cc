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

#include "nodeldp/projection.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace nodeldp {

int node_level_project(int degree, int theta) {
  if (theta < 1) throw std::invalid_argument("node_level_project: theta must be >= 1");
  if (degree < 0) throw std::invalid_argument("node_level_project: negative degree");
  return std::min(degree, theta);
}

double flip_branch_threshold(double eps2) {
  if (!(eps2 > 0)) {
    throw std::invalid_argument("flip_branch_threshold: eps2 must be positive");
  }
  return (std::exp(eps2) - 1.0) / (std::exp(eps2) - std::exp(-eps2));
}

double flip_value(double p, double eps2) {
  if (!(eps2 > 0)) throw std::invalid_argument("flip_value: eps2 must be positive");
  if (p <= flip_branch_threshold(eps2)) return p * std::exp(-eps2);
  return (p - 1.0) * std::exp(eps2) + 1.0;
}

FlipProbabilities flip_probability(int d, int theta, double eps2) {
  if (!(eps2 > 0)) {
    throw std::invalid_argument("flip_probability: eps2 must be positive");
  }
  if (theta < 1) throw std::invalid_argument("flip_probability: theta must be >= 1");
  if (d < 0) throw std::invalid_argument("flip_probability: negative degree");
  if (d == 0) return {1.0, 0.0};

  FlipProbabilities fp;
  if (d >= theta) {
    fp.keep = static_cast<double>(theta) / d;
    fp.flip = static_cast<double>(d - theta) / d;
    return fp;
  }
  const double p = static_cast<double>(d - theta) / d;
  const double x = std::clamp(flip_value(p, eps2), 0.0, 1.0);
  fp.flip = x;
  fp.keep = 1.0 - x;
  return fp;
}

OperationVector build_operation_vector(int owner, int d, int theta,
                                       std::mt19937_64& rng) {
  if (theta < 1) throw std::invalid_argument("build_operation_vector: theta must be >= 1");
  if (d < 0) throw std::invalid_argument("build_operation_vector: negative degree");
  OperationVector vec;
  vec.owner = owner;
  vec.bits.assign(d, 0);
  const int ones = std::max(0, d - theta);
  // Partial Fisher-Yates over slot indices; the first 'ones' entries are
  // a uniform sample without replacement.
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  for (int i = 0; i < ones; ++i) {
    const int j = i + static_cast<int>(bounded_uint64(rng, d - i));
    std::swap(idx[i], idx[j]);
    vec.bits[idx[i]] = 1;
  }
  return vec;
}

void randomize_operation_vector(OperationVector& vec,
                                const FlipProbabilities& probs,
                                std::mt19937_64& rng) {
  for (auto& bit : vec.bits) {
    if (bernoulli(rng, probs.flip)) bit ^= 1;
  }
}

std::vector<std::pair<int, int>> apply_deletion_messages(
    Graph& g, const std::vector<std::pair<int, int>>& messages, Trace* trace) {
  std::vector<std::pair<int, int>> applied;
  std::unordered_set<uint64_t> seen;
  seen.reserve(messages.size() * 2);
  for (auto [a, b] : messages) {
    const int u = std::min(a, b);
    const int v = std::max(a, b);
    if (u < 0 || v >= g.n || u == v) {
      throw std::invalid_argument("apply_deletion_messages: bad edge reference");
    }
    const uint64_t key = (static_cast<uint64_t>(u) << 32) | static_cast<uint64_t>(v);
    TraceEvent ev;
    ev.actor = ActorRole::kPeer;
    ev.tag = PayloadTag::kEdgeDelete;
    ev.server_visible = false;
    ev.u = u;
    ev.v = v;
    ev.payload_size = 1;
    if (!seen.insert(key).second) {
      ev.event = "edge_delete_duplicate";  // idempotent repeat
      if (trace) trace->append(std::move(ev));
      continue;
    }
    if (!g.has_edge(u, v)) {
      ev.event = "edge_delete_ignored";  // reference to a non-edge
      if (trace) trace->append(std::move(ev));
      continue;
    }
    g.remove_edge(u, v);
    applied.emplace_back(u, v);
    ev.event = "edge_delete";
    if (trace) trace->append(std::move(ev));
  }
  return applied;
}

namespace {

// Coordinated noise-free requests: exactly d - theta per over-threshold
// node, preferring mutual edges whose other endpoint is also over the
// threshold (one deletion then serves both endpoints).
std::vector<int> deterministic_request_slots(const Graph& g,
                                             const std::vector<int>& frozen,
                                             int user, int theta,
                                             std::mt19937_64& rng) {
  const int d = frozen[user];
  const int quota = d - theta;
  std::vector<int> over, rest;
  for (int slot = 0; slot < d; ++slot) {
    const int nbr = g.adjacency[user][slot];
    (frozen[nbr] > theta ? over : rest).push_back(slot);
  }
  auto take = [&rng](std::vector<int>& pool, int count,
                     std::vector<int>& out) {
    for (int i = 0; i < count; ++i) {
      const int j = i + static_cast<int>(
                            bounded_uint64(rng, pool.size() - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
  };
  std::vector<int> slots;
  const int from_over = std::min<int>(quota, static_cast<int>(over.size()));
  take(over, from_over, slots);
  take(rest, quota - from_over, slots);
  return slots;
}

}  // namespace

ProjectionOutcome edge_level_project(Graph& g, int theta, double eps2,
                                     const Substreams& subs,
                                     ProjectionMode mode, Trace* trace) {
  if (theta < 1) throw std::invalid_argument("edge_level_project: theta must be >= 1");
  if (mode == ProjectionMode::kRandomized && !(eps2 > 0)) {
    throw std::invalid_argument("edge_level_project: eps2 must be positive");
  }

  const std::vector<int> frozen = g.degrees();
  ProjectionOutcome outcome;
  outcome.initiated.assign(g.n, 0);

  std::vector<std::pair<int, int>> messages;
  for (int i = 0; i < g.n; ++i) {
    const int d = frozen[i];
    auto rng = subs.stream(StreamPurpose::kProjectionBits, i);
    std::vector<int> slots;
    if (mode == ProjectionMode::kDeterministic) {
      if (d > theta) {
        slots = deterministic_request_slots(g, frozen, i, theta, rng);
      }
    } else {
      OperationVector vec = build_operation_vector(i, d, theta, rng);
      randomize_operation_vector(vec, flip_probability(d, theta, eps2), rng);
      for (int slot = 0; slot < d; ++slot) {
        if (vec.bits[slot]) slots.push_back(slot);
      }
    }
    outcome.initiated[i] = static_cast<int>(slots.size());
    for (int slot : slots) messages.emplace_back(i, g.adjacency[i][slot]);
  }

  outcome.deleted_edges = apply_deletion_messages(g, messages, trace);

  outcome.projected_degree.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    outcome.projected_degree[i] = std::min(g.degree(i), theta);
  }
  return outcome;
}

}  // namespace nodeldp
