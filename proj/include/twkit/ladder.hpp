#pragma once

#include <array>
#include <vector>

#include "twkit/decomposition.hpp"
#include "twkit/graph.hpp"

namespace twkit {

/// A 2x(k+1) grid strip embedded in a host graph.  Rail vertices induce
/// exactly the grid; only the four cornerpoints may have neighbours outside.
/// Rungs are the vertical pairs top_rail[i] -- bottom_rail[i].
struct Ladder {
  std::vector<Vertex> top_rail;
  std::vector<Vertex> bottom_rail;

  int length() const { return static_cast<int>(top_rail.size()) - 1; }

  /// {a, b, c, d}: a = top left, b = bottom left, c = top right, d = bottom
  /// right.
  std::array<Vertex, 4> cornerpoints() const {
    return {top_rail.front(), bottom_rail.front(), top_rail.back(), bottom_rail.back()};
  }

  std::set<Vertex> vertex_set() const {
    std::set<Vertex> s(top_rail.begin(), top_rail.end());
    s.insert(bottom_rail.begin(), bottom_rail.end());
    return s;
  }

  bool operator==(const Ladder& other) const {
    return top_rail == other.top_rail && bottom_rail == other.bottom_rail;
  }
};

struct LadderClass {
  /// The two rail edges of any square (equivalently every square) form an
  /// edge cut of the ladder's component.
  bool disconnecting = false;
  std::vector<Vertex> degree2_cornerpoints;  // ascending
  /// Length >= 2 and not disconnecting: forces treewidth >= 3.
  bool tw3_certified = false;
};

/// Throws PreconditionError naming the violated invariant when L is not a
/// valid ladder in g.
void check_ladder(const Graph& g, const Ladder& L);

/// All maximal ladders of length >= min_length, each reported once in
/// canonical presentation, sorted.  A ladder whose vertex set lies strictly
/// inside another reported ladder's vertex set is omitted; a lone square
/// (whose two orientations are both maximal) reports once.
std::vector<Ladder> find_ladders(const Graph& g, int min_length = 1);

LadderClass classify(const Graph& g, const Ladder& L);

/// Replaces L by a ladder of length `target` on the same cornerpoints by
/// contracting rail-edge pairs at the left end.  Everything outside L is
/// untouched.
std::pair<Graph, Ladder> shorten(const Graph& g, const Ladder& L, int target);

/// Inserts `extra` new rungs (two fresh vertices each) into L's rightmost
/// square.
std::pair<Graph, Ladder> lengthen(const Graph& g, const Ladder& L, int extra);

struct DecompositionExtension {
  Graph graph;
  TreeDecomposition td;
  Ladder ladder;
};

/// Lengthens L by one square inside the square wholly contained in
/// td.bags[bag_index], and extends td with two pendant size-5 bags covering
/// the new rung.  The second new bag (last index in the result) contains a
/// full square of the new ladder, so the call can be iterated on it.
/// Requires td valid for g; width grows only if it was below 4.
DecompositionExtension extend_decomposition_square(const Graph& g,
                                                   const TreeDecomposition& td,
                                                   const Ladder& L, int bag_index);

/// Lengthens L by one rung next to a degree-2 cornerpoint without changing
/// the width: suppresses the cornerpoint, attaches two size-4 bags at the
/// bag holding the resulting triangle, then re-subdivides to restore a
/// degree-2 cornerpoint.  Requires td valid for g and treewidth >= 3
/// (certified by the caller).
DecompositionExtension extend_decomposition_pointed(const Graph& g,
                                                    const TreeDecomposition& td,
                                                    const Ladder& L);

}  // namespace twkit
