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

#ifndef NODELDP_GRAPH_H_
#define NODELDP_GRAPH_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nodeldp {

// Undirected simple graph over dense ids 0..n-1. Neighbor lists are kept
// in ascending order; bit j of a user's view addresses adjacency[i][j].
// Immutable during read phases; mutation happens only through the
// coordinated deletion apply pass, so concurrent reads are safe.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adjacency;
  std::vector<long long> original_ids;  // dense id -> id in the input file

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  std::vector<int> degrees() const;
  bool has_edge(int u, int v) const;
  // Removes u-v from both neighbor lists; returns false if absent.
  bool remove_edge(int u, int v);
  long long edge_count() const;
};

// Builds a graph from an explicit edge list over ids 0..n-1; duplicate
// edges and both orientations collapse, self loops are rejected.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

struct LoadStats {
  long long nodes = 0;
  long long input_edge_lines = 0;  // non-comment, non-blank lines
  long long self_loops = 0;
  long long duplicates = 0;  // repeated lines and reverse orientations
  long long undirected_edges = 0;
};

// Loads a whitespace-separated edge list. Lines starting with '#' are
// comments; blank lines are skipped; every other line must hold exactly
// two integer node ids. Self loops are dropped (the node still counts),
// duplicate and reverse-orientation lines collapse to one undirected
// edge, and ids are remapped densely in order of first appearance.
// Throws on malformed lines (message carries the line number) and on a
// file with no nodes at all.
Graph load_edge_list(const std::string& path, LoadStats* stats = nullptr);

// Histogram over degrees 0..n-1. Bins of a true histogram are counts and
// sum to n; bins built from perturbed reports may be fractional after
// post-processing, so the storage is real-valued.
struct DegreeHistogram {
  std::vector<double> bins;
  std::size_t size() const { return bins.size(); }
  double total() const;
};

DegreeHistogram degree_histogram(const Graph& g);
// Histogram of explicit integer degree values; each must lie in [0, n-1].
DegreeHistogram histogram_of_degrees(const std::vector<int>& degrees, int n);

// Per-degree frequencies; bins divided by the user count n (the
// histogram length), so a lossless histogram sums to 1.
struct DegreeDistribution {
  std::vector<double> freq;
};

DegreeDistribution to_distribution(const DegreeHistogram& h);

// Mean squared / mean absolute error between equal-length histograms,
// averaged over bins. Throws on length mismatch.
double mse(const DegreeHistogram& a, const DegreeHistogram& b);
double mae(const DegreeHistogram& a, const DegreeHistogram& b);

// CSV writers. 'preamble' lines are emitted first, each prefixed with
// "# "; headers are "degree,count" and "degree,freq".
void write_histogram_csv(const std::string& path, const DegreeHistogram& h,
                         const std::vector<std::string>& preamble = {});
void write_distribution_csv(const std::string& path,
                            const DegreeDistribution& d,
                            const std::vector<std::string>& preamble = {});

}  // namespace nodeldp

#endif  // NODELDP_GRAPH_H_
