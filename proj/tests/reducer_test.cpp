#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>

#include "brute.hpp"
#include "doctest.h"
#include "twkit/gen.hpp"
#include "twkit/reducer.hpp"

using namespace twkit;

namespace {

Graph strip_graph(int cols) {
  Graph g;
  for (int i = 0; i < 2 * cols; ++i) g.add_vertex(i);
  for (int i = 0; i + 1 < cols; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(cols + i, cols + i + 1);
  }
  for (int i = 0; i < cols; ++i) g.add_edge(i, cols + i);
  return g;
}

// Strip with both rails closed through outside vertices, so every cornerpoint
// has degree 3 and no square disconnects; optionally a clique block on the
// top closure pins the treewidth at 4.
Graph ring_fixture(int length, bool with_clique) {
  int cols = length + 1;
  Graph g = strip_graph(cols);
  Vertex z1 = g.add_vertex();
  g.add_edge(z1, 0);
  g.add_edge(z1, cols - 1);
  Vertex z2 = g.add_vertex();
  g.add_edge(z2, cols);
  g.add_edge(z2, 2 * cols - 1);
  if (with_clique) {
    std::array<Vertex, 4> fresh{};
    for (auto& w : fresh) w = g.add_vertex();
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      g.add_edge(z1, fresh[i]);
      for (std::size_t j = i + 1; j < fresh.size(); ++j) g.add_edge(fresh[i], fresh[j]);
    }
  }
  return g;
}

Graph subdivided_k4() {
  Graph g = complete_graph(4);
  for (auto [u, v] : g.edges()) {
    Vertex mid;
    g = subdivide_edge(g, {u, v}, mid);
  }
  return g;
}

int exact_width(const Graph& g) {
  auto r = exact_treewidth(g);
  REQUIRE(r.exact());
  return *r.width;
}

// Vertices a step removes: strip contractions drop two per shed square.
std::size_t removed_by(const ReductionStep& s) {
  if (s.rule == Rule::suppress) return 1;
  return 2 * static_cast<std::size_t>(s.length_before - s.length_after);
}

}  // namespace

TEST_CASE("policy floors are hard errors") {
  ReductionPolicy low_general;
  low_general.general_target = 3;
  CHECK_THROWS_AS(reduce(strip_graph(3), low_general), PolicyError);
  ReductionPolicy low_aggressive;
  low_aggressive.aggressive_target = 2;
  CHECK_THROWS_AS(reduce(strip_graph(3), low_aggressive), PolicyError);
}

TEST_CASE("a ladder-free graph comes back untouched") {
  Graph g = petersen_graph();
  auto [out, report] = reduce(g);
  CHECK(out == g);
  CHECK(report.steps.empty());
  CHECK(report.vertices_before == 10);
  CHECK(report.vertices_after == 10);
}

TEST_CASE("planted strips stay held ladders of their instances") {
  for (auto style : {PlantStyle::split, PlantStyle::bypass, PlantStyle::weighty})
    for (int length : {2, 5, 8})
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        Planted p = plant_ladder(length, style, seed);
        CAPTURE(length);
        CAPTURE(seed);
        CHECK_NOTHROW(check_ladder(p.graph, p.ladder));
        auto found = find_ladders(p.graph, length);
        REQUIRE(found.size() == 1);
        CHECK(found[0].vertex_set() == p.ladder.vertex_set());
        auto cls = classify(p.graph, p.ladder);
        CHECK(cls.disconnecting == (style == PlantStyle::split));
      }
}

TEST_CASE("a disconnecting ladder collapses to a single square") {
  Planted p = plant_ladder(7, PlantStyle::split, 11);
  int before = exact_width(p.graph);
  auto [out, report] = reduce(p.graph);
  REQUIRE(report.steps.size() == 1);
  CHECK(report.steps[0].rule == Rule::disconnecting);
  CHECK(report.steps[0].length_before == 7);
  CHECK(report.steps[0].length_after == 1);
  CHECK(find_ladders(out, 2).empty());
  CHECK(exact_width(out) == before);
  CHECK(replay(p.graph, report) == out);
}

TEST_CASE("the general rule stops at length 4") {
  Planted p = plant_ladder(9, PlantStyle::bypass, 5);
  int before = exact_width(p.graph);
  CHECK(before == 3);
  auto [out, report] = reduce(p.graph);
  REQUIRE(report.steps.size() == 1);
  CHECK(report.steps[0].rule == Rule::general);
  CHECK(report.steps[0].length_after == 4);
  REQUIRE(find_ladders(out, 4).size() == 1);
  CHECK(find_ladders(out, 5).empty());
  CHECK(exact_width(out) == before);
  CHECK(replay(p.graph, report) == out);
}

TEST_CASE("the degree-2 rule fires when the shortened graph keeps its width") {
  Planted p = plant_ladder(6, PlantStyle::weighty, 23);
  int before = exact_width(p.graph);
  CHECK(before == 4);
  auto [out, report] = reduce(p.graph);
  REQUIRE(report.steps.size() == 1);
  CHECK(report.steps[0].rule == Rule::degree2_cornerpoint);
  CHECK(report.steps[0].length_after == 1);
  CHECK_FALSE(report.tw_certificates.empty());
  CHECK(exact_width(out) == before);
  CHECK(replay(p.graph, report) == out);
}

TEST_CASE("the degree-2 rule is refused when shortening would shed width") {
  // Without the clique block the whole width lives in the ladder itself, so
  // collapsing to one square must not happen even though cornerpoints of
  // degree 2 exist; the general rule takes over instead.
  Planted p = plant_ladder(6, PlantStyle::bypass, 23);
  int before = exact_width(p.graph);
  auto [out, report] = reduce(p.graph);
  REQUIRE(report.steps.size() == 1);
  CHECK(report.steps[0].rule == Rule::general);
  CHECK(report.steps[0].length_after == 4);
  CHECK(exact_width(out) == before);
}

TEST_CASE("aggressive shortening needs the width-4 certificate") {
  Graph pinned = ring_fixture(6, true);
  Graph loose = ring_fixture(6, false);
  REQUIRE(exact_width(pinned) == 4);
  REQUIRE(exact_width(loose) == 4);

  ReductionPolicy policy;
  policy.allow_aggressive = true;

  auto [out_pinned, rep_pinned] = reduce(pinned, policy);
  REQUIRE(rep_pinned.steps.size() == 1);
  CHECK(rep_pinned.steps[0].rule == Rule::aggressive);
  CHECK(rep_pinned.steps[0].length_after == 3);
  CHECK(exact_width(out_pinned) == 4);

  // The loose ring carries its width in the ladder; aggressive is refused
  // with a note and the general rule fires instead.
  auto [out_loose, rep_loose] = reduce(loose, policy);
  REQUIRE(rep_loose.steps.size() == 1);
  CHECK(rep_loose.steps[0].rule == Rule::general);
  CHECK(rep_loose.steps[0].length_after == 4);
  bool noted = false;
  for (const auto& note : rep_loose.tw_certificates)
    if (note.find("refused") != std::string::npos) noted = true;
  CHECK(noted);
  CHECK(exact_width(out_loose) == 4);
}

TEST_CASE("without the aggressive flag the pinned ring stops at 4") {
  Graph pinned = ring_fixture(6, true);
  auto [out, report] = reduce(pinned);
  REQUIRE(report.steps.size() == 1);
  CHECK(report.steps[0].rule == Rule::general);
  CHECK(report.steps[0].length_after == 4);
  CHECK(exact_width(out) == 4);
}

TEST_CASE("suppression policy straightens subdivided graphs") {
  Graph g = subdivided_k4();
  ReductionPolicy policy;
  policy.suppress_degree2 = true;
  auto [out, report] = reduce(g, policy);
  CHECK(report.steps.size() == 6);
  for (const auto& s : report.steps) CHECK(s.rule == Rule::suppress);
  CHECK(brute::isomorphic(out, complete_graph(4)));
  CHECK(exact_width(out) == exact_width(g));
  CHECK(replay(g, report) == out);

  auto [same, empty_report] = reduce(g);
  CHECK(same == g);
  CHECK(empty_report.steps.empty());
}

TEST_CASE("single-step mode stops after one rewrite") {
  ReductionPolicy policy;
  policy.suppress_degree2 = true;
  policy.iterate_to_fixpoint = false;
  auto [out, report] = reduce(subdivided_k4(), policy);
  CHECK(report.steps.size() == 1);
  CHECK(out.num_vertices() == 9);
}

TEST_CASE("reports account for every removed vertex") {
  for (auto style : {PlantStyle::split, PlantStyle::bypass, PlantStyle::weighty}) {
    Planted p = plant_ladder(8, style, 77);
    auto [out, report] = reduce(p.graph);
    CHECK(report.vertices_before == p.graph.num_vertices());
    CHECK(report.vertices_after == out.num_vertices());
    CHECK(report.steps.size() <= report.vertices_before);
    std::size_t removed = 0;
    for (const auto& s : report.steps) removed += removed_by(s);
    CHECK(report.vertices_before - report.vertices_after == removed);
  }
}

TEST_CASE("reduction is deterministic") {
  Planted p = plant_ladder(7, PlantStyle::bypass, 3);
  auto [out1, rep1] = reduce(p.graph);
  auto [out2, rep2] = reduce(p.graph);
  CHECK(out1 == out2);
  REQUIRE(rep1.steps.size() == rep2.steps.size());
  for (std::size_t i = 0; i < rep1.steps.size(); ++i) {
    CHECK(rep1.steps[i].rule == rep2.steps[i].rule);
    CHECK(rep1.steps[i].ladder == rep2.steps[i].ladder);
    CHECK(rep1.steps[i].length_after == rep2.steps[i].length_after);
  }
}

TEST_CASE("reduction preserves exact treewidth on planted instances") {
  for (auto style : {PlantStyle::split, PlantStyle::bypass, PlantStyle::weighty})
    for (int length : {5, 6})
      for (std::uint64_t seed : {101u, 202u}) {
        Planted p = plant_ladder(length, style, seed);
        REQUIRE(p.graph.num_vertices() <= 22);
        auto [out, report] = reduce(p.graph);
        CAPTURE(length);
        CAPTURE(seed);
        CHECK(exact_width(out) == exact_width(p.graph));
        CHECK(replay(p.graph, report) == out);
      }
}

TEST_CASE("certificates are real evidence or absent") {
  CHECK(certify_tw_at_least(complete_graph(5), 4).has_value());
  CHECK_FALSE(certify_tw_at_least(complete_graph(5), 5).has_value());
  Graph tree;
  for (int i = 0; i < 5; ++i) tree.add_vertex(i);
  for (int i = 1; i < 5; ++i) tree.add_edge(0, i);
  CHECK_FALSE(certify_tw_at_least(tree, 2).has_value());
  CHECK(certify_tw_at_least(tree, 1).has_value());

  Planted p = plant_ladder(4, PlantStyle::bypass, 9);
  auto cert = certify_tw_at_least(p.graph, 3);
  REQUIRE(cert.has_value());
  CHECK(cert->bound >= 3);
  CHECK_FALSE(cert->method.empty());

  CHECK_FALSE(certify_tw_at_least(p.graph, 10).has_value());
}
