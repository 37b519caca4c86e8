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

#ifndef NODELDP_PROJECTION_H_
#define NODELDP_PROJECTION_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "nodeldp/graph.h"
#include "nodeldp/rng.h"
#include "nodeldp/trace.h"

namespace nodeldp {

// Degree truncation: min(degree, theta). theta >= 1, degree >= 0.
int node_level_project(int degree, int theta);

// Flip probability crossover for the under-threshold branch:
// (e^eps2 - 1) / (e^eps2 - e^-eps2). Equals 1 / (1 + e^-eps2).
double flip_branch_threshold(double eps2);

// Unclamped flip probability for target deletion rate p under budget
// eps2: p * e^-eps2 while p <= flip_branch_threshold(eps2), otherwise
// (p - 1) * e^eps2 + 1. For p in (0, 1) the result x satisfies
// e^-eps2 <= x / p <= e^eps2 and e^-eps2 <= (1 - x) / (1 - p) <= e^eps2.
double flip_value(double p, double eps2);

struct FlipProbabilities {
  double keep = 1;
  double flip = 0;
};

// Per-bit keep/flip probabilities for a user of degree d. Over the
// threshold: keep = theta/d, flip = (d - theta)/d. Under it, the target
// rate (d - theta)/d is negative and the clamped flip probability is 0,
// so edges are preserved. d == 0 yields the no-op pair {1, 0}.
FlipProbabilities flip_probability(int d, int theta, double eps2);

// One user's deletion-request vector; bit j addresses the j-th neighbor
// in ascending neighbor-id order.
struct OperationVector {
  int owner = -1;
  std::vector<uint8_t> bits;
};

// Vector of length d with exactly max(0, d - theta) ones at uniformly
// random positions.
OperationVector build_operation_vector(int owner, int d, int theta,
                                       std::mt19937_64& rng);

// Complements each bit independently with probability probs.flip.
void randomize_operation_vector(OperationVector& vec,
                                const FlipProbabilities& probs,
                                std::mt19937_64& rng);

// Applies one batch of edge-deletion messages symmetrically. Duplicates
// are idempotent and references to absent edges are ignored; both leave
// a note in the trace. Returns the edges actually removed. Messages are
// recorded without sender linkage.
std::vector<std::pair<int, int>> apply_deletion_messages(
    Graph& g, const std::vector<std::pair<int, int>>& messages, Trace* trace);

enum class ProjectionMode {
  // Full mechanism: random forced ones plus per-bit randomization.
  kRandomized,
  // Noise-free oracle: per-bit randomization disabled, each node over
  // the threshold requests exactly d - theta deletions, and requests
  // prefer mutual edges between two over-threshold endpoints so that
  // one deletion serves both (the coordinated, noise-free analysis).
  kDeterministic,
};

struct ProjectionOutcome {
  std::vector<int> projected_degree;          // min(post-deletion degree, theta)
  std::vector<std::pair<int, int>> deleted_edges;
  std::vector<int> initiated;                 // deletion requests per user
};

// Edge-level local projection. Every user builds and randomizes its
// operation vector against a frozen snapshot of the original adjacency;
// all requests are then collected, deduplicated, and applied in one
// symmetric pass. Mutates g in place.
ProjectionOutcome edge_level_project(Graph& g, int theta, double eps2,
                                     const Substreams& subs,
                                     ProjectionMode mode, Trace* trace);

}  // namespace nodeldp

#endif  // NODELDP_PROJECTION_H_
