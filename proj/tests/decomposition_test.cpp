#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "twkit/decomposition.hpp"
#include "twkit/graph.hpp"

using namespace twkit;

namespace {

Graph path(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph grid(int rows, int cols) {
  Graph g;
  for (int i = 0; i < rows * cols; ++i) g.add_vertex(i);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

Graph cube() {
  Graph g;
  for (int i = 0; i < 8; ++i) g.add_vertex(i);
  for (int i = 0; i < 8; ++i)
    for (int b = 0; b < 3; ++b)
      if (i < (i ^ (1 << b))) g.add_edge(i, i ^ (1 << b));
  return g;
}

Graph petersen() {
  Graph g;
  for (int i = 0; i < 10; ++i) g.add_vertex(i);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

// Circular ladder: two concentric n-cycles joined by spokes.
Graph prism(int n) {
  Graph g;
  for (int i = 0; i < 2 * n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

Graph wagner() {
  Graph g = cycle(8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g;
  for (int i = 0; i < a + b; ++i) g.add_vertex(i);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph from_mask(int n, unsigned long long mask) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) g.add_edge(i, j);
  return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.add_edge(i, j);
  return g;
}

// Solves, insists on exactness and a valid witness, returns the width.
int solved(const Graph& g, OracleBudget budget = {}) {
  auto r = exact_treewidth(g, budget);
  REQUIRE(r.exact());
  REQUIRE(r.width.has_value());
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->width() == *r.width);
  auto report = validate(g, *r.witness);
  for (const auto& v : report.violations) CAPTURE(v.detail);
  REQUIRE(report.ok);
  return *r.width;
}

}  // namespace

TEST_CASE("width is the largest bag size minus one") {
  TreeDecomposition td;
  CHECK(td.width() == -1);
  td.bags = {{1, 2, 3}, {2}};
  td.tree_edges = {{0, 1}};
  CHECK(td.width() == 2);
}

TEST_CASE("validate accepts a hand-built path decomposition") {
  TreeDecomposition td;
  td.bags = {{0, 1}, {1, 2}, {2, 3}};
  td.tree_edges = {{0, 1}, {1, 2}};
  auto report = validate(path(4), td);
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("validate flags uncovered vertices and edges") {
  TreeDecomposition td;
  td.bags = {{0, 1}};
  auto report = validate(path(3), td);
  REQUIRE_FALSE(report.ok);
  bool missing_vertex = false, missing_edge = false;
  for (const auto& v : report.violations) {
    if (v.axiom == Axiom::tw1 && v.vertex == 2) missing_vertex = true;
    if (v.axiom == Axiom::tw2 && v.edge == Edge{1, 2}) missing_edge = true;
  }
  CHECK(missing_vertex);
  CHECK(missing_edge);
}

TEST_CASE("validate flags a vertex whose bags are scattered") {
  TreeDecomposition td;
  td.bags = {{0, 1}, {1, 2}, {0, 2}};
  td.tree_edges = {{0, 1}, {1, 2}};
  auto report = validate(path(3), td);
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.violations.size() == 1);
  const auto& v = report.violations.front();
  CHECK(v.axiom == Axiom::tw3);
  CHECK(v.vertex == 0);
  CHECK(v.detail.find("2") != std::string::npos);
}

TEST_CASE("validate reports foreign vertices as coverage violations") {
  TreeDecomposition td;
  td.bags = {{0, 1, 99}};
  auto report = validate(path(2), td);
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations.front().axiom == Axiom::tw1);
  CHECK(report.violations.front().detail.find("99") != std::string::npos);
}

TEST_CASE("validate rejects trees that are not trees") {
  Graph g = path(2);
  TreeDecomposition td;
  td.bags = {{0, 1}, {0, 1}, {0, 1}};
  td.tree_edges = {{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(validate(g, td), StructureError);
  td.tree_edges = {{0, 1}};
  CHECK_THROWS_AS(validate(g, td), StructureError);  // bag 2 unreachable
  td.tree_edges = {{0, 1}, {1, 5}};
  CHECK_THROWS_AS(validate(g, td), StructureError);
  td.tree_edges = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(validate(g, td), StructureError);
  td.tree_edges = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(validate(g, td), StructureError);
}

TEST_CASE("decomposition_from_ordering follows the given elimination order") {
  Graph g = cycle(5);
  TreeDecomposition td = decomposition_from_ordering(g, {0, 1, 2, 3, 4});
  CHECK(validate(g, td).ok);
  CHECK(td.width() == 2);
  CHECK_THROWS_AS(decomposition_from_ordering(g, {0, 1, 2, 3}), PreconditionError);
  CHECK_THROWS_AS(decomposition_from_ordering(g, {0, 1, 2, 3, 3}), PreconditionError);
}

TEST_CASE("frozen widths of the standard fixtures") {
  CHECK(solved(Graph{}) == -1);
  Graph lone;
  lone.add_vertex(0);
  CHECK(solved(lone) == 0);
  CHECK(solved(path(2)) == 1);
  CHECK(solved(path(6)) == 1);
  CHECK(solved(cycle(5)) == 2);
  CHECK(solved(complete(4)) == 3);
  CHECK(solved(complete(5)) == 4);
  CHECK(solved(complete_bipartite(3, 3)) == 3);
  CHECK(solved(grid(2, 5)) == 2);
  CHECK(solved(grid(3, 3)) == 3);
  CHECK(solved(grid(4, 4)) == 4);
  CHECK(solved(cube()) == 3);
  CHECK(solved(petersen()) == 4);
  CHECK(solved(prism(5)) == 4);
  CHECK(solved(wagner()) == 4);
}

TEST_CASE("disconnected graphs solve componentwise") {
  Graph g = complete(4);
  for (int i = 0; i < 5; ++i) g.add_vertex(10 + i);
  for (int i = 0; i < 5; ++i) g.add_edge(10 + i, 10 + (i + 1) % 5);
  g.add_vertex(99);
  CHECK(solved(g) == 3);
}

TEST_CASE("engine matches the naive oracle on every 4- and 5-vertex graph") {
  for (int n = 4; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
      Graph g = from_mask(n, mask);
      CAPTURE(n);
      CAPTURE(mask);
      REQUIRE(solved(g) == brute::treewidth(g));
    }
  }
}

TEST_CASE("engine matches the naive oracle on random graphs up to 8 vertices") {
  std::mt19937 rng(20240817);
  for (int round = 0; round < 60; ++round) {
    int n = 6 + round % 3;
    double p = 0.2 + 0.15 * (round % 5);
    Graph g = random_graph(n, p, rng);
    CAPTURE(round);
    REQUIRE(solved(g) == brute::treewidth(g));
  }
}

TEST_CASE("serial and parallel paths agree") {
  std::mt19937 rng(99);
  for (int round = 0; round < 12; ++round) {
    Graph g = random_graph(9 + round % 4, 0.3, rng);
    auto a = exact_treewidth(g);
    auto b = exact_treewidth_serial(g);
    REQUIRE(a.exact());
    REQUIRE(b.exact());
    CHECK(*a.width == *b.width);
    CHECK(validate(g, *a.witness).ok);
    CHECK(validate(g, *b.witness).ok);
  }
}

TEST_CASE("starved budgets yield honest brackets instead of lies") {
  OracleBudget starved;
  starved.dp_max_vertices = 0;
  starved.bnb_node_limit = 1;
  auto r = exact_treewidth(wagner(), starved);
  CHECK_FALSE(r.exact());
  CHECK_FALSE(r.width.has_value());
  CHECK(r.lower == 3);
  CHECK(r.upper == 4);
}

TEST_CASE("the branch and bound fallback is exact when given room") {
  OracleBudget no_dp;
  no_dp.dp_max_vertices = 0;
  std::mt19937 rng(7);
  for (int round = 0; round < 8; ++round) {
    Graph g = random_graph(7, 0.35, rng);
    CAPTURE(round);
    auto r = exact_treewidth(g, no_dp);
    REQUIRE(r.exact());
    CHECK(*r.width == brute::treewidth(g));
    CHECK(validate(g, *r.witness).ok);
  }
}

TEST_CASE("degree-2 suppression budget preserves the answer") {
  Graph g = complete(4);
  for (auto [u, v] : g.edges()) {
    Vertex mid;
    g = subdivide_edge(g, {u, v}, mid);
  }
  REQUIRE(g.num_vertices() == 10);
  OracleBudget squeeze;
  squeeze.suppress_degree2 = true;
  CHECK(solved(g, squeeze) == 3);
  CHECK(solved(g) == 3);
}

TEST_CASE("bounds bracket the exact width") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(7, 0.15 + 0.1 * (round % 6), rng);
    int tw = brute::treewidth(g);
    CAPTURE(round);
    CHECK(lower_bound(g) <= tw);
    TreeDecomposition ub = upper_bound_heuristic(g);
    CHECK(validate(g, ub).ok);
    CHECK(ub.width() >= tw);
  }
}

TEST_CASE("treewidth never rises under edge deletion") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 10; ++round) {
    Graph g = random_graph(7, 0.5, rng);
    auto edges = g.edges();
    if (edges.empty()) continue;
    Graph h = g;
    h.remove_edge(edges[round % edges.size()].first, edges[round % edges.size()].second);
    CHECK(solved(h) <= solved(g));
  }
}
