#pragma once

#include <cstdint>

#include "twkit/graph.hpp"
#include "twkit/ladder.hpp"

namespace twkit {

Graph grid_graph(int rows, int cols);
// Two concentric n-cycles joined by spokes.
Graph circular_ladder(int n);
Graph complete_graph(int n);
Graph petersen_graph();
// The 8-vertex cycle with all four diameters.
Graph wagner_graph();
// Random spanning tree plus extra random edges; simple and connected.
Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed);

struct Planted {
  Graph graph;
  Ladder ladder;
};

enum class PlantStyle {
  split,    // rail edges form an edge cut: separate gadgets hang off each end
  bypass,   // an outside path joins the two ends, so no square disconnects
  weighty,  // bypass plus a clique block pinning the width at 4
};

// Deterministic random host built around a strip of the given length; the
// strip is a valid ladder of the result and the style fixes its class.
Planted plant_ladder(int length, PlantStyle style, std::uint64_t seed);

}  // namespace twkit
