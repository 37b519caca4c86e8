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

#include "nodeldp/loss.h"

#include <stdexcept>

namespace nodeldp {

double publishing_loss(long long n, int k, double eps3) {
  if (n < 1) throw std::invalid_argument("publishing_loss: n must be >= 1");
  if (k < 1) throw std::invalid_argument("publishing_loss: k must be >= 1");
  if (!(eps3 > 0)) throw std::invalid_argument("publishing_loss: eps3 must be positive");
  const double kk = static_cast<double>(k);
  return 8.0 * static_cast<double>(n) * kk * kk / (eps3 * eps3);
}

long long projection_loss(std::span<const int> degrees, int k) {
  if (k < 1) throw std::invalid_argument("projection_loss: k must be >= 1");
  long long total = 0;
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("projection_loss: negative degree");
    if (d > k) total += d - k;
  }
  return total;
}

double selection_noise_scale(long long n, int k, double eps1, int K) {
  if (!(eps1 > 0)) {
    throw std::invalid_argument("selection_noise_scale: eps1 must be positive");
  }
  if (K < 1) throw std::invalid_argument("selection_noise_scale: K must be >= 1");
  if (k > n - 2) {
    throw std::invalid_argument(
        "selection_noise_scale: k must be <= n - 2 to keep the sensitivity positive");
  }
  return static_cast<double>(n - 1 - k) * static_cast<double>(K) / eps1;
}

}  // namespace nodeldp
