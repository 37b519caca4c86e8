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

#ifndef NODELDP_CRYPTO_H_
#define NODELDP_CRYPTO_H_

#include <cstdint>
#include <random>
#include <vector>

namespace nodeldp {

// All residues live in Z_{2^64}; unsigned wraparound is the reduction.

// Linear order-preserving encryption Enc(x) = a*x + b + noise, with
// noise uniform on [0, noise_bound]. Ordering of ciphertexts follows
// ordering of plaintexts whenever noise_bound < a; summed ciphertexts
// of n users order by the plaintext sums whenever noise_bound is at
// most (a - 1) / n.
struct OpeParams {
  uint64_t a = 0;
  uint64_t b = 0;
  uint64_t noise_bound = 0;
};

inline constexpr uint64_t kOpeDefaultA = uint64_t{1} << 24;
inline constexpr uint64_t kOpeMaxB = uint64_t{1} << 20;
// Fixed-point scale applied to real-valued loss shares before encryption.
inline constexpr double kLossFixedPoint = 1048576.0;  // 2^20

// Throws unless n * (a * max_plaintext + b + noise_bound) fits below
// 2^64, so aggregates never wrap.
void validate_ope_params(const OpeParams& p, long long n,
                         uint64_t max_plaintext);

// Key generation for an instance of n users whose fixed-point plaintexts
// are bounded by max_plaintext. a starts at 2^24 and halves until the
// no-wrap bound holds; b is uniform on [1, 2^20]; noise_bound is
// floor((a - 1) / n).
OpeParams make_ope_params(long long n, uint64_t max_plaintext,
                          std::mt19937_64& rng);

// Deterministic core; the caller supplies the noise draw.
uint64_t ope_encrypt(uint64_t x, const OpeParams& p, uint64_t noise);
// Draws noise uniformly on [0, noise_bound].
uint64_t ope_encrypt(uint64_t x, const OpeParams& p, std::mt19937_64& rng);

// Pairwise secret seeds dealt once by trusted setup; seed(i, j) is
// shared by exactly users i and j.
class PairwiseSeeds {
 public:
  static PairwiseSeeds deal(int n, std::mt19937_64& rng);

  uint64_t seed(int i, int j) const;  // order-insensitive; i != j
  int n() const { return n_; }
  const std::vector<uint64_t>& all() const { return seeds_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> seeds_;  // triangular, pairs (i, j) with i < j
};

// Keyed PRG expanding a pair seed to a fresh 64-bit residue per round;
// both endpoints derive the same value from O(1) shared state.
uint64_t prg_residue(uint64_t seed, uint64_t round);

// One user's additive mask for a round:
//   sum_{j > i} PRG(seed_ij, round) - sum_{j < i} PRG(seed_ij, round).
// Masks over all users sum to zero mod 2^64.
uint64_t derive_mask(int i, const PairwiseSeeds& seeds, uint64_t round);

// All users' masks for one round in a single pass over the pairs.
std::vector<uint64_t> round_masks(const PairwiseSeeds& seeds, uint64_t round);

struct MaskedLossCiphertext {
  uint64_t value = 0;
  int owner = -1;
  int round_k = 0;
};

// Sums one round's masked ciphertexts mod 2^64. Requires exactly one
// ciphertext per user 0..expected_n-1, all from the same round; the
// masks cancel in the sum. Dropped or duplicated users throw.
uint64_t secure_aggregate(const std::vector<MaskedLossCiphertext>& cts,
                          int expected_n);

}  // namespace nodeldp

#endif  // NODELDP_CRYPTO_H_
