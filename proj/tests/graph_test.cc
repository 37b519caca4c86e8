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

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "nodeldp/synthetic.h"
#include "testutil.h"

namespace nodeldp {
namespace {

using testing::TempDir;
using testing::write_file;

TEST(GraphFromEdges, BuildsSortedAdjacency) {
  Graph g = graph_from_edges(4, {{2, 0}, {0, 1}, {3, 1}});
  EXPECT_EQ(g.n, 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.adjacency[0], (std::vector<int>{1, 2}));
  EXPECT_EQ(g.adjacency[1], (std::vector<int>{0, 3}));
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
}

TEST(GraphFromEdges, CollapsesDuplicatesAndOrientations) {
  Graph g = graph_from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.degree(0), 1);
}

TEST(GraphFromEdges, RejectsSelfLoopsAndBadIds) {
  EXPECT_THROW(graph_from_edges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(graph_from_edges(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(graph_from_edges(3, {{-1, 0}}), std::invalid_argument);
}

TEST(GraphRemoveEdge, RemovesBothDirections) {
  Graph g = testing::five_node_graph();
  EXPECT_TRUE(g.remove_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 3));
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.degree(3), 1);
  EXPECT_FALSE(g.remove_edge(3, 0));  // already gone
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(FiveNodeGraph, HasDocumentedDegrees) {
  Graph g = testing::five_node_graph();
  EXPECT_EQ(g.degrees(), (std::vector<int>{3, 1, 1, 2, 1}));
  DegreeHistogram h = degree_histogram(g);
  EXPECT_EQ(h.bins, (std::vector<double>{0, 3, 1, 1, 0}));
  EXPECT_DOUBLE_EQ(h.total(), 5.0);
}

TEST(LoadEdgeList, ParsesCommentsBlanksAndRemapsIds) {
  TempDir dir("graph-load");
  const std::string path = dir.file("edges.txt");
  write_file(path,
             "# comment line\n"
             "10 20\n"
             "\n"
             "20 30\n"
             "30 10\n"
             "10 10\n"    // self loop: dropped, node already known
             "20 10\n");  // reverse duplicate
  LoadStats stats;
  Graph g = load_edge_list(path, &stats);
  EXPECT_EQ(g.n, 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(stats.nodes, 3);
  EXPECT_EQ(stats.input_edge_lines, 5);
  EXPECT_EQ(stats.self_loops, 1);
  EXPECT_EQ(stats.duplicates, 1);
  EXPECT_EQ(stats.undirected_edges, 3);
  // Dense ids follow first appearance: 10 -> 0, 20 -> 1, 30 -> 2.
  EXPECT_EQ(g.original_ids, (std::vector<long long>{10, 20, 30}));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(LoadEdgeList, ThrowsWithLineNumberOnMalformedLine) {
  TempDir dir("graph-bad");
  const std::string path = dir.file("bad.txt");
  write_file(path, "1 2\n3 four\n");
  try {
    load_edge_list(path);
    FAIL() << "expected a parse error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos)
        << e.what();
  }
}

TEST(LoadEdgeList, ThrowsOnMissingAndEmptyFiles) {
  TempDir dir("graph-empty");
  EXPECT_THROW(load_edge_list(dir.file("absent.txt")), std::runtime_error);
  const std::string path = dir.file("empty.txt");
  write_file(path, "# only a comment\n");
  EXPECT_THROW(load_edge_list(path), std::runtime_error);
}

TEST(Histogram, OfExplicitDegreesValidatesRange) {
  DegreeHistogram h = histogram_of_degrees({0, 1, 1, 3}, 4);
  EXPECT_EQ(h.bins, (std::vector<double>{1, 2, 0, 1}));
  EXPECT_THROW(histogram_of_degrees({4}, 4), std::invalid_argument);
  EXPECT_THROW(histogram_of_degrees({-1}, 4), std::invalid_argument);
}

TEST(Histogram, DistributionDividesByUserCount) {
  DegreeHistogram h = histogram_of_degrees({1, 1, 1, 2}, 4);
  DegreeDistribution d = to_distribution(h);
  EXPECT_DOUBLE_EQ(d.freq[1], 0.75);
  EXPECT_DOUBLE_EQ(d.freq[2], 0.25);
  double sum = 0;
  for (double f : d.freq) sum += f;
  EXPECT_DOUBLE_EQ(sum, 1.0);
}

TEST(Metrics, MseAndMaeAverageOverBins) {
  DegreeHistogram a{{0, 3, 1, 1, 0}};
  DegreeHistogram b{{0, 5, 0, 0, 0}};
  // Differences (0, 2, -1, -1, 0): mse = 6/5, mae = 4/5.
  EXPECT_DOUBLE_EQ(mse(a, b), 1.2);
  EXPECT_DOUBLE_EQ(mae(a, b), 0.8);
  EXPECT_DOUBLE_EQ(mse(a, a), 0.0);
  DegreeHistogram c{{1, 2}};
  EXPECT_THROW(mse(a, c), std::invalid_argument);
  EXPECT_THROW(mae(a, c), std::invalid_argument);
}

TEST(CsvWriters, EmitHeadersAndPreamble) {
  TempDir dir("graph-csv");
  DegreeHistogram h{{1, 2, 0}};
  const std::string path = dir.file("h.csv");
  write_histogram_csv(path, h, {"method=test"});
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# method=test");
  std::getline(in, line);
  EXPECT_EQ(line, "degree,count");
  std::getline(in, line);
  EXPECT_EQ(line, "0,1");
}

TEST(Synthetic, PowerLawRespectsBoundsAndSeed) {
  std::mt19937_64 rng(7);
  Graph g = power_law_graph(300, 2.5, 1, 40, rng);
  EXPECT_EQ(g.n, 300);
  int dmax = 0;
  long long dsum = 0;
  for (int d : g.degrees()) {
    dmax = std::max(dmax, d);
    dsum += d;
  }
  EXPECT_LE(dmax, 40);
  EXPECT_GT(dsum, 0);
  // Heavy-tailed shape: most nodes sit at the minimum degree.
  DegreeHistogram h = degree_histogram(g);
  EXPECT_GT(h.bins[1] + h.bins[0] + h.bins[2], 150);

  std::mt19937_64 rng2(7);
  Graph g2 = power_law_graph(300, 2.5, 1, 40, rng2);
  EXPECT_EQ(g.degrees(), g2.degrees());  // same seed, same graph

  std::mt19937_64 rng3(8);
  Graph g3 = power_law_graph(300, 2.5, 1, 40, rng3);
  EXPECT_NE(g.degrees(), g3.degrees());  // different seed, different draw
}

TEST(Synthetic, ValidatesArguments) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(power_law_graph(1, 2.5, 1, 1, rng), std::invalid_argument);
  EXPECT_THROW(power_law_graph(10, 0.5, 1, 3, rng), std::invalid_argument);
  EXPECT_THROW(power_law_graph(10, 2.5, 0, 3, rng), std::invalid_argument);
  EXPECT_THROW(power_law_graph(10, 2.5, 4, 3, rng), std::invalid_argument);
  EXPECT_THROW(power_law_graph(10, 2.5, 1, 10, rng), std::invalid_argument);
}

}  // namespace
}  // namespace nodeldp
