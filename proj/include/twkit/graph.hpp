#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twkit/error.hpp"

namespace twkit {

using Vertex = std::int32_t;

/// Undirected edge, stored normalized (first < second).
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph with stable, opaque vertex ids and value
/// semantics.  Ids are never reused: fresh ids come from a counter that is
/// carried along when the graph is copied, so rewrites on a copy cannot
/// collide with ids of the original.  All iteration orders are sorted.
class Graph {
public:
  Graph() = default;

  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  bool has_edge(Vertex u, Vertex v) const;

  int degree(Vertex v) const;
  const std::set<Vertex>& neighbors(Vertex v) const;

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const;

  std::vector<Vertex> vertices() const;  // ascending
  std::vector<Edge> edges() const;       // lexicographic

  /// Adds a vertex with a fresh id and returns it.
  Vertex add_vertex();
  /// Adds a vertex with an explicit id (no-op if present).
  void add_vertex(Vertex v);
  /// Adds an edge between existing vertices.  Self loops are rejected;
  /// re-adding an existing edge is a no-op (the graph stays simple).
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);

  const std::map<Vertex, std::string>& labels() const { return labels_; }
  std::optional<std::string> label(Vertex v) const;
  void set_label(Vertex v, const std::string& text);
  void clear_label(Vertex v);

  bool operator==(const Graph& other) const {
    return adj_ == other.adj_ && labels_ == other.labels_;
  }

private:
  std::map<Vertex, std::set<Vertex>> adj_;
  std::map<Vertex, std::string> labels_;
  Vertex next_id_ = 0;
};

/// Two sides of the graph after removing a set of edges.
struct EdgeCut {
  std::vector<Edge> edges;
  std::set<Vertex> side_a;  // side containing the smaller endpoint of edges[0]
  std::set<Vertex> side_b;
};

/// Builds a graph from an edge list plus optional vertex labels.
/// Rejects self-loops, duplicate (unordered) edges and non-injective labels,
/// naming the offending pair.  Labelled vertices missing from the edge list
/// are added as isolated vertices.
Graph build_graph(const std::vector<Edge>& edges,
                  const std::map<Vertex, std::string>& labels = {});

/// True if v has degree 2 and removing it keeps treewidth unchanged: either
/// its neighbors are non-adjacent (the path through v contracts to an edge)
/// or deleting v leaves some cycle intact.
bool can_suppress_safely(const Graph& g, Vertex v);

/// Removes a degree-2 vertex.  Non-adjacent neighbors get joined by an edge;
/// adjacent neighbors mean v is simply deleted.  Throws GuardedError when the
/// deletion would erase the only cycle in the graph (the one case where the
/// rewrite can lower treewidth), PreconditionError when deg(v) != 2.
Graph suppress_degree2(const Graph& g, Vertex v);

/// Replaces edge e by a path of length 2 through a fresh vertex.
Graph subdivide_edge(const Graph& g, Edge e);
Graph subdivide_edge(const Graph& g, Edge e, Vertex& created);

/// Contracts edge e, merging both endpoints into the smaller id.  The result
/// is simplified immediately (no loops or parallel edges).
Graph contract_edge(const Graph& g, Edge e);
/// Contraction variant keeping a chosen endpoint's id (and label).
Graph contract_edge_into(const Graph& g, Edge e, Vertex keep);

/// If removing `edges` disconnects g, returns the cut with its two sides
/// (side_a is the component of the first edge's smaller endpoint, side_b the
/// rest).  Requires g connected and every listed edge present.
std::optional<EdgeCut> is_edge_cut(const Graph& g, const std::vector<Edge>& edges);

bool is_connected(const Graph& g);
std::vector<std::set<Vertex>> connected_components(const Graph& g);

/// Vertex sets of the biconnected components.  Bridges appear as 2-element
/// blocks, isolated vertices as singletons.  Sorted by smallest member.
std::vector<std::set<Vertex>> biconnected_components(const Graph& g);

/// Subgraph induced by `keep` (labels restricted accordingly).
Graph induced_subgraph(const Graph& g, const std::set<Vertex>& keep);

}  // namespace twkit
