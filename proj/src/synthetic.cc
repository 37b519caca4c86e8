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

#include "nodeldp/synthetic.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "nodeldp/rng.h"

namespace nodeldp {

Graph power_law_graph(int n, double gamma, int min_degree, int max_degree,
                      std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("power_law_graph: n must be >= 2");
  if (gamma <= 1.0) {
    throw std::invalid_argument("power_law_graph: gamma must be > 1");
  }
  if (min_degree < 1 || min_degree > max_degree || max_degree > n - 1) {
    throw std::invalid_argument(
        "power_law_graph: need 1 <= min_degree <= max_degree <= n - 1");
  }

  // Inverse-CDF sampling over the discrete support.
  std::vector<double> cdf;
  cdf.reserve(max_degree - min_degree + 1);
  double acc = 0;
  for (int d = min_degree; d <= max_degree; ++d) {
    acc += std::pow(static_cast<double>(d), -gamma);
    cdf.push_back(acc);
  }
  for (double& c : cdf) c /= acc;

  std::vector<int> target(n);
  long long stub_total = 0;
  for (int i = 0; i < n; ++i) {
    const double u = canonical_double(rng);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const int d =
        min_degree + static_cast<int>(std::distance(cdf.begin(), it));
    target[i] = std::min(d, max_degree);
    stub_total += target[i];
  }
  if (stub_total % 2 != 0) {  // stubs must pair up
    for (int attempt = 0; attempt < n; ++attempt) {
      const int i = static_cast<int>(bounded_uint64(rng, n));
      if (target[i] < max_degree) {
        ++target[i];
        ++stub_total;
        break;
      }
      if (target[i] > min_degree) {
        --target[i];
        --stub_total;
        break;
      }
    }
    if (stub_total % 2 != 0) ++target[0], ++stub_total;
  }

  std::vector<int> stubs;
  stubs.reserve(stub_total);
  for (int i = 0; i < n; ++i) {
    stubs.insert(stubs.end(), target[i], i);
  }
  // Fisher-Yates with the project-wide bounded sampler, so the layout is
  // reproducible across standard libraries.
  for (std::size_t i = stubs.size(); i > 1; --i) {
    const std::size_t j = bounded_uint64(rng, i);
    std::swap(stubs[i - 1], stubs[j]);
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(stubs.size() / 2);
  std::unordered_set<uint64_t> seen;
  seen.reserve(stubs.size());
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) continue;  // erased self loop
    if (u > v) std::swap(u, v);
    const uint64_t key =
        (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
    if (!seen.insert(key).second) continue;  // erased duplicate
    edges.emplace_back(u, v);
  }
  return graph_from_edges(n, edges);
}

}  // namespace nodeldp
