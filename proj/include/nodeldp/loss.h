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

#ifndef NODELDP_LOSS_H_
#define NODELDP_LOSS_H_

#include <span>
#include <vector>

namespace nodeldp {

// Expected utility loss from publishing n degrees truncated at k with
// Laplace(2k/eps3) noise: 8 * n * k^2 / eps3^2 (n times the variance).
double publishing_loss(long long n, int k, double eps3);

// Utility loss from truncating degrees at k: sum of max(0, d - k).
long long projection_loss(std::span<const int> degrees, int k);

// One row of the candidate-parameter objective F(k) = E_P + E_D.
struct LossBreakdown {
  int k = 0;
  double e_p = 0;  // projection loss (noisy under the plain protocol)
  double e_d = 0;  // publishing loss
  double f = 0;
  bool selected = false;
};

// Laplace scale protecting one user's per-round projection loss:
// (n - 1 - k) * K / eps1. Requires k <= n - 2 so the sensitivity
// n - 1 - k stays positive.
double selection_noise_scale(long long n, int k, double eps1, int K);

}  // namespace nodeldp

#endif  // NODELDP_LOSS_H_
