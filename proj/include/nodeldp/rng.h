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

#ifndef NODELDP_RNG_H_
#define NODELDP_RNG_H_

#include <cstdint>
#include <random>

namespace nodeldp {

// splitmix64 finalizer; bijective on 64-bit words.
uint64_t mix64(uint64_t x);

// Labels for deriving independent substreams from one master seed.
// Streams are keyed by (purpose, user, round) only, never by epsilon or
// alpha, so sweep cells sharing a master seed draw common random numbers.
enum class StreamPurpose : uint64_t {
  kSelectionNoise = 1,
  kProjectionBits = 2,
  kPublishNoise = 3,
  kSeedDealing = 4,
  kOpeNoise = 5,
  kOpeKey = 6,
  kSynthetic = 7,
  kInstance = 8,
};

// Substream factory. Every random draw in a run is traceable to
// (master seed, purpose, user, round), which makes replays bit-identical.
class Substreams {
 public:
  explicit Substreams(uint64_t master_seed) : master_(master_seed) {}

  uint64_t derive(StreamPurpose purpose, uint64_t a = 0, uint64_t b = 0) const;
  std::mt19937_64 stream(StreamPurpose purpose, uint64_t a = 0,
                         uint64_t b = 0) const;
  uint64_t master_seed() const { return master_; }

 private:
  uint64_t master_;
};

// Uniform double in [0, 1) from the top 53 bits of one draw; identical
// output on every platform for a given engine state.
double canonical_double(std::mt19937_64& rng);

// Uniform integer in [0, n) by rejection sampling; n >= 1.
uint64_t bounded_uint64(std::mt19937_64& rng, uint64_t n);

// Bernoulli(p) draw; p outside [0, 1] is clamped.
bool bernoulli(std::mt19937_64& rng, double p);

// One draw from Laplace(0, scale) by inverse CDF. scale must be positive.
double laplace_sample(double scale, std::mt19937_64& rng);

}  // namespace nodeldp

#endif  // NODELDP_RNG_H_
