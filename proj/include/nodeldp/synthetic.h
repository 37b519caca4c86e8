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

#ifndef NODELDP_SYNTHETIC_H_
#define NODELDP_SYNTHETIC_H_

#include <random>

#include "nodeldp/graph.h"

namespace nodeldp {

// Configuration-model graph with P(degree = d) proportional to
// d^-gamma on [min_degree, max_degree]. Stubs are paired uniformly;
// self loops and duplicate edges are erased, so realized degrees can
// fall slightly below the drawn sequence. Requires gamma > 1 and
// 1 <= min_degree <= max_degree <= n - 1.
Graph power_law_graph(int n, double gamma, int min_degree, int max_degree,
                      std::mt19937_64& rng);

}  // namespace nodeldp

#endif  // NODELDP_SYNTHETIC_H_
