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

#include "nodeldp/budget.h"

#include <stdexcept>

namespace nodeldp {

BudgetSplit split_budget(double eps_total, double alpha, int K) {
  if (!(eps_total > 0)) {
    throw std::invalid_argument("split_budget: eps_total must be positive");
  }
  if (!(alpha > 0 && alpha < 1)) {
    throw std::invalid_argument("split_budget: alpha must lie in (0, 1)");
  }
  if (K < 1) throw std::invalid_argument("split_budget: K must be >= 1");
  BudgetSplit s;
  s.eps_total = eps_total;
  s.alpha = alpha;
  s.K = K;
  s.eps3 = alpha * eps_total;
  s.eps1 = (1.0 - alpha) * eps_total / 2.0;
  s.eps2 = s.eps1;
  return s;
}

PrivacyAccount account_privacy(const BudgetSplit& split) {
  if (split.K < 1) throw std::invalid_argument("account_privacy: K must be >= 1");
  PrivacyAccount acc;
  acc.amortized_total = split.eps1 / split.K + split.eps2 + split.eps3;
  acc.composed_total = split.eps1 + split.eps2 + split.eps3;
  return acc;
}

double publishing_scale(int theta, double eps3) {
  if (theta < 1) throw std::invalid_argument("publishing_scale: theta must be >= 1");
  if (!(eps3 > 0)) throw std::invalid_argument("publishing_scale: eps3 must be positive");
  return 2.0 * static_cast<double>(theta) / eps3;
}

}  // namespace nodeldp
