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

#include "nodeldp/graph.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace nodeldp {

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n);
  for (int v = 0; v < n; ++v) d[v] = degree(v);
  return d;
}

bool Graph::has_edge(int u, int v) const {
  const auto& row = adjacency[u];
  return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::remove_edge(int u, int v) {
  auto erase_from = [](std::vector<int>& row, int x) {
    auto it = std::lower_bound(row.begin(), row.end(), x);
    if (it == row.end() || *it != x) return false;
    row.erase(it);
    return true;
  };
  if (!erase_from(adjacency[u], v)) return false;
  erase_from(adjacency[v], u);
  return true;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (const auto& row : adjacency) total += static_cast<long long>(row.size());
  return total / 2;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("graph_from_edges: negative n");
  Graph g;
  g.n = n;
  g.adjacency.assign(n, {});
  g.original_ids.resize(n);
  std::iota(g.original_ids.begin(), g.original_ids.end(), 0LL);
  std::unordered_set<uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("graph_from_edges: endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("graph_from_edges: self loop");
    const uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) |
                         static_cast<uint64_t>(std::max(u, v));
    if (!seen.insert(key).second) continue;
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  return g;
}

Graph load_edge_list(const std::string& path, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);

  LoadStats local;
  std::unordered_map<long long, int> dense;
  std::vector<long long> original;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<uint64_t> seen;

  auto intern = [&](long long id) {
    auto [it, inserted] = dense.emplace(id, static_cast<int>(original.size()));
    if (inserted) original.push_back(id);
    return it->second;
  };

  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') continue;          // comment
    std::istringstream ls(line);
    long long a, b;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw std::runtime_error("edge list parse error at line " +
                               std::to_string(line_no) + ": '" + line + "'");
    }
    ++local.input_edge_lines;
    const int u = intern(a);
    const int v = intern(b);
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    const uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) |
                         static_cast<uint64_t>(std::max(u, v));
    if (!seen.insert(key).second) {
      ++local.duplicates;
      continue;
    }
    edges.emplace_back(u, v);
  }
  if (original.empty()) {
    throw std::runtime_error("edge list is empty: " + path);
  }

  Graph g;
  g.n = static_cast<int>(original.size());
  g.original_ids = std::move(original);
  g.adjacency.assign(g.n, {});
  for (auto [u, v] : edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());

  local.nodes = g.n;
  local.undirected_edges = static_cast<long long>(edges.size());
  if (stats) *stats = local;
  return g;
}

double DegreeHistogram::total() const {
  double t = 0;
  for (double b : bins) t += b;
  return t;
}

DegreeHistogram degree_histogram(const Graph& g) {
  return histogram_of_degrees(g.degrees(), g.n);
}

DegreeHistogram histogram_of_degrees(const std::vector<int>& degrees, int n) {
  if (n < 1) throw std::invalid_argument("histogram_of_degrees: n must be >= 1");
  DegreeHistogram h;
  h.bins.assign(n, 0.0);
  for (int d : degrees) {
    if (d < 0 || d >= n) {
      throw std::invalid_argument("histogram_of_degrees: degree out of range");
    }
    h.bins[d] += 1.0;
  }
  return h;
}

DegreeDistribution to_distribution(const DegreeHistogram& h) {
  DegreeDistribution d;
  const double n = static_cast<double>(h.bins.size());
  d.freq.resize(h.bins.size());
  for (std::size_t i = 0; i < h.bins.size(); ++i) d.freq[i] = h.bins[i] / n;
  return d;
}

namespace {
void require_same_length(const DegreeHistogram& a, const DegreeHistogram& b) {
  if (a.bins.size() != b.bins.size()) {
    throw std::invalid_argument("histogram length mismatch");
  }
  if (a.bins.empty()) throw std::invalid_argument("empty histogram");
}
}  // namespace

double mse(const DegreeHistogram& a, const DegreeHistogram& b) {
  require_same_length(a, b);
  double acc = 0;
  for (std::size_t i = 0; i < a.bins.size(); ++i) {
    const double d = a.bins[i] - b.bins[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.bins.size());
}

double mae(const DegreeHistogram& a, const DegreeHistogram& b) {
  require_same_length(a, b);
  double acc = 0;
  for (std::size_t i = 0; i < a.bins.size(); ++i) {
    acc += std::fabs(a.bins[i] - b.bins[i]);
  }
  return acc / static_cast<double>(a.bins.size());
}

namespace {
void write_two_column_csv(const std::string& path, const char* header,
                          const std::vector<double>& values,
                          const std::vector<std::string>& preamble) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  for (const auto& line : preamble) out << "# " << line << "\n";
  out << header << "\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << i << "," << values[i] << "\n";
  }
}
}  // namespace

void write_histogram_csv(const std::string& path, const DegreeHistogram& h,
                         const std::vector<std::string>& preamble) {
  write_two_column_csv(path, "degree,count", h.bins, preamble);
}

void write_distribution_csv(const std::string& path,
                            const DegreeDistribution& d,
                            const std::vector<std::string>& preamble) {
  write_two_column_csv(path, "degree,freq", d.freq, preamble);
}

}  // namespace nodeldp
