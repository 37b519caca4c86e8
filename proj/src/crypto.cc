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

#include "nodeldp/crypto.h"

#include <stdexcept>

#include "nodeldp/rng.h"

namespace nodeldp {

namespace {
// Whole expression evaluated in 128 bits; the modulus is 2^64.
bool fits_modulus(long long n, uint64_t a, uint64_t max_plaintext, uint64_t b,
                  uint64_t noise_bound) {
  const unsigned __int128 modulus = (unsigned __int128)1 << 64;
  const unsigned __int128 per_user = (unsigned __int128)a * max_plaintext +
                                     b + noise_bound;
  return (unsigned __int128)n * per_user < modulus;
}
}  // namespace

void validate_ope_params(const OpeParams& p, long long n,
                         uint64_t max_plaintext) {
  if (n < 1) throw std::invalid_argument("validate_ope_params: n must be >= 1");
  if (p.a < 2) throw std::invalid_argument("validate_ope_params: a must be >= 2");
  if (p.b < 1) throw std::invalid_argument("validate_ope_params: b must be >= 1");
  if (p.noise_bound >= p.a) {
    throw std::invalid_argument(
        "validate_ope_params: noise_bound must be below a");
  }
  if (!fits_modulus(n, p.a, max_plaintext, p.b, p.noise_bound)) {
    throw std::invalid_argument(
        "validate_ope_params: aggregate can wrap the 2^64 modulus");
  }
}

OpeParams make_ope_params(long long n, uint64_t max_plaintext,
                          std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("make_ope_params: n must be >= 1");
  uint64_t a = kOpeDefaultA;
  while (a >= 2 &&
         !fits_modulus(n, a, max_plaintext, kOpeMaxB, a - 1)) {
    a >>= 1;
  }
  if (a < 2) {
    throw std::invalid_argument(
        "make_ope_params: no multiplier fits the modulus for this instance");
  }
  OpeParams p;
  p.a = a;
  p.b = 1 + bounded_uint64(rng, kOpeMaxB);
  p.noise_bound = (a - 1) / static_cast<uint64_t>(n);
  return p;
}

uint64_t ope_encrypt(uint64_t x, const OpeParams& p, uint64_t noise) {
  if (p.a < 2) throw std::invalid_argument("ope_encrypt: a must be >= 2");
  if (noise > p.noise_bound) {
    throw std::invalid_argument("ope_encrypt: noise exceeds noise_bound");
  }
  const unsigned __int128 value =
      (unsigned __int128)p.a * x + p.b + noise;
  if (value >= ((unsigned __int128)1 << 64)) {
    throw std::runtime_error("ope_encrypt: ciphertext exceeds the modulus");
  }
  return static_cast<uint64_t>(value);
}

uint64_t ope_encrypt(uint64_t x, const OpeParams& p, std::mt19937_64& rng) {
  return ope_encrypt(x, p, bounded_uint64(rng, p.noise_bound + 1));
}

PairwiseSeeds PairwiseSeeds::deal(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("PairwiseSeeds: n must be >= 1");
  PairwiseSeeds s;
  s.n_ = n;
  const std::size_t pairs =
      static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  s.seeds_.resize(pairs);
  for (auto& seed : s.seeds_) seed = rng();
  return s;
}

uint64_t PairwiseSeeds::seed(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_ || i == j) {
    throw std::invalid_argument("PairwiseSeeds: bad pair");
  }
  // Row-major triangular index for the pair (i, j), i < j.
  const std::size_t si = static_cast<std::size_t>(i);
  const std::size_t offset =
      si * (2 * static_cast<std::size_t>(n_) - si - 1) / 2 +
      static_cast<std::size_t>(j - i - 1);
  return seeds_[offset];
}

uint64_t prg_residue(uint64_t seed, uint64_t round) {
  return mix64(mix64(seed + 0x9E3779B97F4A7C15ULL * (round + 1)) ^ seed);
}

uint64_t derive_mask(int i, const PairwiseSeeds& seeds, uint64_t round) {
  if (i < 0 || i >= seeds.n()) {
    throw std::invalid_argument("derive_mask: user out of range");
  }
  uint64_t mask = 0;
  for (int j = 0; j < seeds.n(); ++j) {
    if (j == i) continue;
    const uint64_t r = prg_residue(seeds.seed(i, j), round);
    if (j > i) {
      mask += r;
    } else {
      mask -= r;
    }
  }
  return mask;
}

std::vector<uint64_t> round_masks(const PairwiseSeeds& seeds, uint64_t round) {
  std::vector<uint64_t> masks(seeds.n(), 0);
  for (int i = 0; i < seeds.n(); ++i) {
    for (int j = i + 1; j < seeds.n(); ++j) {
      const uint64_t r = prg_residue(seeds.seed(i, j), round);
      masks[i] += r;
      masks[j] -= r;
    }
  }
  return masks;
}

uint64_t secure_aggregate(const std::vector<MaskedLossCiphertext>& cts,
                          int expected_n) {
  if (expected_n < 1) {
    throw std::invalid_argument("secure_aggregate: expected_n must be >= 1");
  }
  if (static_cast<int>(cts.size()) != expected_n) {
    throw std::invalid_argument("secure_aggregate: missing or extra ciphertexts");
  }
  std::vector<char> present(expected_n, 0);
  const int round = cts.front().round_k;
  uint64_t sum = 0;
  for (const auto& ct : cts) {
    if (ct.owner < 0 || ct.owner >= expected_n) {
      throw std::invalid_argument("secure_aggregate: unknown user");
    }
    if (present[ct.owner]) {
      throw std::invalid_argument("secure_aggregate: duplicate user");
    }
    if (ct.round_k != round) {
      throw std::invalid_argument("secure_aggregate: mixed rounds");
    }
    present[ct.owner] = 1;
    sum += ct.value;
  }
  return sum;
}

}  // namespace nodeldp
