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

#include "nodeldp/selection.h"

#include <cmath>
#include <stdexcept>

#include "nodeldp/projection.h"

namespace nodeldp {

namespace {

void trace_user_loss(Trace* trace, int user, int k, double raw) {
  if (!trace) return;
  TraceEvent ev;
  ev.event = "raw_loss";
  ev.round = k;
  ev.actor = ActorRole::kUser;
  ev.tag = PayloadTag::kRawLoss;
  ev.num = raw;
  ev.server_visible = false;
  ev.payload_size = 1;
  trace->append(std::move(ev));
  (void)user;
}

void trace_theta(Trace* trace, int theta) {
  if (!trace) return;
  TraceEvent ev;
  ev.event = "theta";
  ev.actor = ActorRole::kServer;
  ev.tag = PayloadTag::kTheta;
  ev.num = theta;
  ev.server_visible = true;
  ev.payload_size = 1;
  trace->append(std::move(ev));
}

}  // namespace

SelectionOutcome pureldp_select(const Graph& g, const BudgetSplit& split,
                                const Substreams& subs, bool noise_enabled,
                                Trace* trace) {
  const long long n = g.n;
  const int K = split.K;
  if (K < 1) throw std::invalid_argument("pureldp_select: K must be >= 1");
  if (K > n - 2) {
    throw std::invalid_argument("pureldp_select: K must be <= n - 2");
  }

  const std::vector<int> degrees = g.degrees();
  // One stream per user, consumed in candidate order, so draws depend
  // only on (seed, user, round) and replay identically across budgets.
  std::vector<std::mt19937_64> streams;
  streams.reserve(n);
  for (long long i = 0; i < n; ++i) {
    streams.push_back(subs.stream(StreamPurpose::kSelectionNoise, i));
  }

  SelectionOutcome out;
  out.rounds = K;
  out.per_k.reserve(K);
  for (int k = 1; k <= K; ++k) {
    const double scale = selection_noise_scale(n, k, split.eps1, K);
    double noisy_sum = 0;
    for (long long i = 0; i < n; ++i) {
      const int d = degrees[i];
      const int dhat = node_level_project(d, k);
      const double raw = static_cast<double>(d - dhat);
      trace_user_loss(trace, static_cast<int>(i), k, raw);
      const double noisy =
          noise_enabled ? raw + laplace_sample(scale, streams[i]) : raw;
      if (trace) {
        TraceEvent ev;
        ev.event = "noisy_loss";
        ev.round = k;
        ev.actor = ActorRole::kUser;
        ev.tag = PayloadTag::kNoisyLoss;
        ev.num = noisy;
        ev.server_visible = true;
        ev.payload_size = 1;
        trace->append(std::move(ev));
      }
      noisy_sum += noisy;
    }
    LossBreakdown row;
    row.k = k;
    row.e_p = noisy_sum;
    row.e_d = publishing_loss(n, k, split.eps3);
    row.f = row.e_p + row.e_d;
    out.per_k.push_back(row);
  }

  int best = 0;
  for (int i = 1; i < K; ++i) {
    if (out.per_k[i].f < out.per_k[best].f) best = i;  // ties keep smaller k
  }
  out.per_k[best].selected = true;
  out.theta = out.per_k[best].k;
  trace_theta(trace, out.theta);
  return out;
}

SelectionOutcome crypto_select(const Graph& g, const BudgetSplit& split,
                               const Substreams& subs, Trace* trace,
                               const OpeParams* ope_override,
                               const PairwiseSeeds* seeds_override) {
  const long long n = g.n;
  const int K = split.K;
  if (K < 1) throw std::invalid_argument("crypto_select: K must be >= 1");
  if (n < 1) throw std::invalid_argument("crypto_select: empty graph");

  // Fixed-point plaintexts are bounded by the worst per-user share:
  // loss at most n - 1 plus the largest per-user publishing loss.
  const double max_share =
      static_cast<double>(n - 1) +
      publishing_loss(n, K, split.eps3) / static_cast<double>(n);
  const uint64_t max_plaintext =
      static_cast<uint64_t>(std::llround(max_share * kLossFixedPoint)) + 1;

  // Key holder: parameters never leave this scope except to the users.
  OpeParams params;
  if (ope_override) {
    params = *ope_override;
  } else {
    auto key_rng = subs.stream(StreamPurpose::kOpeKey);
    params = make_ope_params(n, max_plaintext, key_rng);
  }
  validate_ope_params(params, n, max_plaintext);
  if (trace) {
    TraceEvent ev;
    ev.event = "ope_key";
    ev.actor = ActorRole::kKeyHolder;
    ev.tag = PayloadTag::kOpeKey;
    ev.word = params.a;
    ev.server_visible = false;
    ev.payload_size = 2;
    trace->append(ev);
    ev.word = params.b;
    trace->append(std::move(ev));
  }

  // Trusted setup deals one seed per user pair; each round expands it to
  // a fresh residue, so no per-round key exchange is needed.
  PairwiseSeeds dealt;
  const PairwiseSeeds* seeds = seeds_override;
  if (!seeds) {
    auto deal_rng = subs.stream(StreamPurpose::kSeedDealing);
    dealt = PairwiseSeeds::deal(static_cast<int>(n), deal_rng);
    seeds = &dealt;
  }
  if (seeds->n() != n) {
    throw std::runtime_error("crypto_select: pairwise seed setup incomplete");
  }
  if (trace) {
    for (uint64_t s : seeds->all()) {
      TraceEvent ev;
      ev.event = "pair_seed";
      ev.actor = ActorRole::kKeyHolder;
      ev.tag = PayloadTag::kPairwiseSeed;
      ev.word = s;
      ev.server_visible = false;
      ev.payload_size = 1;
      trace->append(std::move(ev));
    }
  }

  const std::vector<int> degrees = g.degrees();
  std::vector<std::mt19937_64> noise_streams;
  noise_streams.reserve(n);
  for (long long i = 0; i < n; ++i) {
    noise_streams.push_back(subs.stream(StreamPurpose::kOpeNoise, i));
  }

  SelectionOutcome out;
  out.rounds = K;
  out.aggregates.reserve(K);
  for (int k = 1; k <= K; ++k) {
    const double e_d_share =
        publishing_loss(n, k, split.eps3) / static_cast<double>(n);
    const std::vector<uint64_t> masks = round_masks(*seeds, k);
    std::vector<MaskedLossCiphertext> cts;
    cts.reserve(n);
    for (long long i = 0; i < n; ++i) {
      const int d = degrees[i];
      const int dhat = node_level_project(d, k);
      const double raw = static_cast<double>(d - dhat);
      trace_user_loss(trace, static_cast<int>(i), k, raw);
      const uint64_t fix = static_cast<uint64_t>(
          std::llround((raw + e_d_share) * kLossFixedPoint));
      MaskedLossCiphertext ct;
      ct.owner = static_cast<int>(i);
      ct.round_k = k;
      ct.value = ope_encrypt(fix, params, noise_streams[i]) + masks[i];
      if (trace) {
        TraceEvent ev;
        ev.event = "ciphertext";
        ev.round = k;
        ev.actor = ActorRole::kUser;
        ev.tag = PayloadTag::kCiphertext;
        ev.word = ct.value;
        ev.server_visible = true;
        ev.payload_size = 1;
        trace->append(std::move(ev));
      }
      cts.push_back(ct);
    }
    const uint64_t agg = secure_aggregate(cts, static_cast<int>(n));
    out.aggregates.emplace_back(k, agg);
    if (trace) {
      TraceEvent ev;
      ev.event = "aggregate";
      ev.round = k;
      ev.actor = ActorRole::kServer;
      ev.tag = PayloadTag::kAggregate;
      ev.word = agg;
      ev.server_visible = true;
      ev.payload_size = 1;
      trace->append(std::move(ev));
    }
  }

  int best = 0;
  for (int i = 1; i < K; ++i) {
    if (out.aggregates[i].second < out.aggregates[best].second) best = i;
  }
  out.theta = out.aggregates[best].first;
  trace_theta(trace, out.theta);
  return out;
}

}  // namespace nodeldp
