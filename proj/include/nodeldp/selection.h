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

#ifndef NODELDP_SELECTION_H_
#define NODELDP_SELECTION_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "nodeldp/budget.h"
#include "nodeldp/crypto.h"
#include "nodeldp/graph.h"
#include "nodeldp/loss.h"
#include "nodeldp/rng.h"
#include "nodeldp/trace.h"

namespace nodeldp {

// Candidate evaluation uses truncation (node-level projection) on each
// user's own degree, so the per-user loss is exactly max(0, d - k) and
// its sensitivity is n - 1 - k.

struct SelectionOutcome {
  int theta = 0;
  int rounds = 0;  // candidate rounds executed
  // Per-candidate breakdown as the server saw it. e_p carries the noisy
  // sum under the plain protocol and the exact sum when noise is off.
  std::vector<LossBreakdown> per_k;
  // Encrypted path: the server-side audit trail stores only the
  // per-candidate masked aggregates.
  std::vector<std::pair<int, uint64_t>> aggregates;
};

// Plain local-DP selection: every user reports its per-candidate
// truncation loss plus Laplace((n - 1 - k) * K / eps1) noise; the server
// sums reports, adds the publishing loss, and picks the smallest-F
// candidate (ties to the smaller k). noise_enabled=false is the oracle
// mode used by equivalence tests. Requires K <= n - 2.
SelectionOutcome pureldp_select(const Graph& g, const BudgetSplit& split,
                                const Substreams& subs, bool noise_enabled,
                                Trace* trace);

// Crypto-assisted selection: each user encrypts the fixed-point share
// round(2^20 * (loss_i + E_D(k)/n)) under the linear scheme, adds its
// pairwise mask, and the server picks the candidate with the smallest
// masked aggregate (ties to the smaller k). The aggregate equals
// a * sum(shares) + n*b + sum(noise), and the noise bound keeps the
// argmin identical to the plaintext one. Key material and seeds never
// reach the server. Optional overrides inject pre-built parameters or
// seeds; seeds dealt for a different n throw.
SelectionOutcome crypto_select(const Graph& g, const BudgetSplit& split,
                               const Substreams& subs, Trace* trace,
                               const OpeParams* ope_override = nullptr,
                               const PairwiseSeeds* seeds_override = nullptr);

}  // namespace nodeldp

#endif  // NODELDP_SELECTION_H_
