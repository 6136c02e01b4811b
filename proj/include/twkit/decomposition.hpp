#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "twkit/graph.hpp"

namespace twkit {

/// Bags indexed 0..bags.size()-1 plus tree edges over those indices.
struct TreeDecomposition {
  std::vector<std::set<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  /// Max bag size minus one; -1 for no bags or a single empty bag.
  int width() const;
};

enum class Axiom { tw1, tw2, tw3 };

const char* axiom_name(Axiom a);

/// One failed axiom instance: an uncovered vertex (tw1), an uncovered edge
/// (tw2), or a vertex whose bags do not form a connected subtree (tw3).
struct Violation {
  Axiom axiom;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks all three axioms and reports every violation, not just the first.
/// Bag vertices outside g count as tw1 violations.  Throws StructureError
/// when tree_edges is not a tree over the bag indices; that is a malformed
/// decomposition, kept distinct from axiom violations.
ValidationReport validate(const Graph& g, const TreeDecomposition& td);

/// Resource caps for exact_treewidth.  Zero means unlimited.
struct OracleBudget {
  int dp_max_vertices = 24;        // per-block subset-DP ceiling (hard cap 26)
  double time_limit_seconds = 0.0;
  std::uint64_t bnb_node_limit = 0;
  bool parallel = true;
  bool suppress_degree2 = false;   // opt-in; rewrites are otherwise left to callers
};

/// Either an exact width with a witness, or "unknown" carrying the best
/// bounds established before the budget ran out.  Never a wrong number.
struct TreewidthResult {
  std::optional<int> width;
  std::optional<TreeDecomposition> witness;
  int lower = -1;
  int upper = std::numeric_limits<int>::max();

  bool exact() const { return width.has_value(); }
};

/// Exact treewidth with a validating witness of the same width.  Splits into
/// connected and biconnected pieces, then runs subset DP over elimination
/// orderings per block, falling back to branch and bound above
/// budget.dp_max_vertices.  The width is deterministic regardless of
/// schedule.
TreewidthResult exact_treewidth(const Graph& g, const OracleBudget& budget = {});

/// Reference single-threaded engine with its own DP loop; used by tests and
/// the benchmark to cross-check the parallel path.
TreewidthResult exact_treewidth_serial(const Graph& g, const OracleBudget& budget = {});

/// Max of degeneracy, contraction-based min-width, a greedy clique, and the
/// ladder rule (a non-disconnecting ladder of length >= 2 forces >= 3).
/// Never exceeds the exact treewidth.
int lower_bound(const Graph& g);

/// Min-fill elimination decomposition.  Always valid; width >= treewidth.
TreeDecomposition upper_bound_heuristic(const Graph& g);

/// Decomposition induced by eliminating `order` (a permutation of V(g))
/// front to back: one bag per vertex, parented on its earliest-eliminated
/// higher neighbor.
TreeDecomposition decomposition_from_ordering(const Graph& g,
                                              const std::vector<Vertex>& order);

}  // namespace twkit
