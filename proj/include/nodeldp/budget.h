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

#ifndef NODELDP_BUDGET_H_
#define NODELDP_BUDGET_H_

namespace nodeldp {

// Three-way privacy budget split: eps3 = alpha * eps drives degree
// publishing, and the remainder is halved between parameter selection
// (eps1, spread over K rounds) and projection (eps2).
struct BudgetSplit {
  double eps_total = 0;
  double alpha = 0;
  double eps1 = 0;
  double eps2 = 0;
  double eps3 = 0;
  int K = 0;  // number of candidate parameters
};

// Validates eps_total > 0, 0 < alpha < 1, K >= 1.
BudgetSplit split_budget(double eps_total, double alpha, int K);

// Two accounting views of one run. 'amortized_total' charges selection
// eps1/K for its single released round; 'composed_total' charges the
// full eps1 under sequential composition. Both are reported everywhere.
struct PrivacyAccount {
  double amortized_total = 0;  // eps1/K + eps2 + eps3
  double composed_total = 0;   // eps1 + eps2 + eps3
};

PrivacyAccount account_privacy(const BudgetSplit& split);

// Laplace scale 2*theta/eps3 used when publishing projected degrees.
double publishing_scale(int theta, double eps3);

}  // namespace nodeldp

#endif  // NODELDP_BUDGET_H_
