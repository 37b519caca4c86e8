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

#include "nodeldp/rng.h"

#include <cmath>
#include <stdexcept>

namespace nodeldp {

namespace {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

uint64_t Substreams::derive(StreamPurpose purpose, uint64_t a,
                            uint64_t b) const {
  uint64_t x = master_ + kGolden * static_cast<uint64_t>(purpose);
  x = mix64(x);
  x = mix64(x + kGolden * (a + 1));
  x = mix64(x + kGolden * (b + 1));
  return x;
}

std::mt19937_64 Substreams::stream(StreamPurpose purpose, uint64_t a,
                                   uint64_t b) const {
  return std::mt19937_64(derive(purpose, a, b));
}

double canonical_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t bounded_uint64(std::mt19937_64& rng, uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounded_uint64: n must be >= 1");
  if (n == 1) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

bool bernoulli(std::mt19937_64& rng, double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return canonical_double(rng) < p;
}

double laplace_sample(double scale, std::mt19937_64& rng) {
  if (!(scale > 0)) {
    throw std::invalid_argument("laplace_sample: scale must be positive");
  }
  const double u = canonical_double(rng) - 0.5;
  const double sign = u < 0 ? -1.0 : 1.0;
  return -scale * sign * std::log(1.0 - 2.0 * std::fabs(u));
}

}  // namespace nodeldp
