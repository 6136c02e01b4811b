#include "twkit/ladder.hpp"

#include <algorithm>
#include <map>

namespace twkit {

namespace {

std::string pair_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

void check_ladder(const Graph& g, const Ladder& L) {
  const auto& top = L.top_rail;
  const auto& bottom = L.bottom_rail;
  if (top.size() < 2 || top.size() != bottom.size())
    throw PreconditionError("rails must be equally long with at least 2 vertices each");
  std::set<Vertex> rail;
  for (const auto* side : {&top, &bottom})
    for (Vertex v : *side) {
      if (!g.has_vertex(v))
        throw PreconditionError("rail vertex " + std::to_string(v) + " is not in the graph");
      if (!rail.insert(v).second)
        throw PreconditionError("rail vertex " + std::to_string(v) + " repeats");
    }
  std::size_t k = top.size() - 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(top[i], top[i + 1]))
      throw PreconditionError("missing top rail edge " + pair_str(top[i], top[i + 1]));
    if (!g.has_edge(bottom[i], bottom[i + 1]))
      throw PreconditionError("missing bottom rail edge " + pair_str(bottom[i], bottom[i + 1]));
  }
  for (std::size_t i = 0; i <= k; ++i)
    if (!g.has_edge(top[i], bottom[i]))
      throw PreconditionError("missing rung " + pair_str(top[i], bottom[i]));

  // Exactness: rail vertices induce the grid and nothing more.
  std::map<Vertex, std::set<Vertex>> grid;
  for (std::size_t i = 0; i < k; ++i) {
    grid[top[i]].insert(top[i + 1]);
    grid[top[i + 1]].insert(top[i]);
    grid[bottom[i]].insert(bottom[i + 1]);
    grid[bottom[i + 1]].insert(bottom[i]);
  }
  for (std::size_t i = 0; i <= k; ++i) {
    grid[top[i]].insert(bottom[i]);
    grid[bottom[i]].insert(top[i]);
  }
  for (Vertex v : rail)
    for (Vertex w : g.neighbors(v))
      if (rail.count(w) && !grid[v].count(w))
        throw PreconditionError("rail vertices carry chord " + pair_str(v, w));

  auto corners = L.cornerpoints();
  std::set<Vertex> corner_set(corners.begin(), corners.end());
  for (Vertex v : rail) {
    if (corner_set.count(v)) continue;
    for (Vertex w : g.neighbors(v))
      if (!rail.count(w))
        throw PreconditionError("interior vertex " + std::to_string(v) +
                                " has neighbour " + std::to_string(w) + " outside the ladder");
  }
}

namespace {

// The single neighbour of v other than the two given ones; v has degree 3.
Vertex spare_neighbour(const Graph& g, Vertex v, Vertex skip1, Vertex skip2) {
  for (Vertex w : g.neighbors(v))
    if (w != skip1 && w != skip2) return w;
  return -1;
}

// Grows the strip one square to the right; returns false when the incremental
// containment checks refuse.
bool extend_right(const Graph& g, std::vector<Vertex>& top, std::vector<Vertex>& bottom,
                  std::set<Vertex>& members) {
  Vertex t = top.back(), b = bottom.back();
  if (g.degree(t) != 3 || g.degree(b) != 3) return false;
  Vertex t2 = spare_neighbour(g, t, top[top.size() - 2], b);
  Vertex b2 = spare_neighbour(g, b, bottom[bottom.size() - 2], t);
  if (t2 == b2 || members.count(t2) || members.count(b2)) return false;
  if (!g.has_edge(t2, b2)) return false;
  for (Vertex v : members) {
    if (v != t && g.has_edge(t2, v)) return false;
    if (v != b && g.has_edge(b2, v)) return false;
  }
  top.push_back(t2);
  bottom.push_back(b2);
  members.insert(t2);
  members.insert(b2);
  return true;
}

std::vector<Vertex> catenate(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Smallest of the four symmetric presentations.
Ladder canonical_presentation(const Ladder& L) {
  std::vector<Ladder> views(4);
  views[0] = L;
  views[1] = {L.bottom_rail, L.top_rail};
  views[2] = {{L.top_rail.rbegin(), L.top_rail.rend()},
              {L.bottom_rail.rbegin(), L.bottom_rail.rend()}};
  views[3] = {views[2].bottom_rail, views[2].top_rail};
  return *std::min_element(views.begin(), views.end(), [](const Ladder& a, const Ladder& b) {
    return catenate(a.top_rail, a.bottom_rail) < catenate(b.top_rail, b.bottom_rail);
  });
}

}  // namespace

std::vector<Ladder> find_ladders(const Graph& g, int min_length) {
  if (min_length < 1) throw PreconditionError("min_length must be >= 1");

  // Chordless 4-cycles (a,b,c,d), a minimal, enumerated once each.
  std::vector<std::array<Vertex, 4>> cycles;
  for (Vertex a : g.vertices()) {
    std::vector<Vertex> nb;
    for (Vertex w : g.neighbors(a))
      if (w > a) nb.push_back(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex b = nb[i], d = nb[j];
        if (g.has_edge(b, d)) continue;
        for (Vertex c : g.neighbors(b)) {
          if (c <= a || c == d || !g.has_edge(c, d) || g.has_edge(a, c)) continue;
          cycles.push_back({a, b, c, d});
        }
      }
  }

  std::map<std::vector<Vertex>, Ladder> unique;  // canonical rails -> ladder
  for (const auto& [a, b, c, d] : cycles) {
    const Ladder seeds[2] = {{{a, b}, {d, c}}, {{b, c}, {a, d}}};
    for (const Ladder& seed : seeds) {
      std::vector<Vertex> top = seed.top_rail, bottom = seed.bottom_rail;
      std::set<Vertex> members(top.begin(), top.end());
      members.insert(bottom.begin(), bottom.end());
      while (extend_right(g, top, bottom, members)) {
      }
      std::reverse(top.begin(), top.end());
      std::reverse(bottom.begin(), bottom.end());
      while (extend_right(g, top, bottom, members)) {
      }
      Ladder grown = canonical_presentation({top, bottom});
      unique.emplace(catenate(grown.top_rail, grown.bottom_rail), grown);
    }
  }

  // One report per vertex set (a lone square grows in both orientations), and
  // nothing that sits strictly inside another ladder.
  std::map<std::set<Vertex>, Ladder> by_set;
  for (auto& [key, L] : unique) {
    auto vs = L.vertex_set();
    auto it = by_set.find(vs);
    if (it == by_set.end())
      by_set.emplace(std::move(vs), L);
  }
  std::vector<Ladder> result;
  for (auto& [vs, L] : by_set) {
    bool nested = false;
    for (auto& [other, M] : by_set) {
      if (other.size() <= vs.size()) continue;
      if (std::includes(other.begin(), other.end(), vs.begin(), vs.end())) {
        nested = true;
        break;
      }
    }
    if (!nested && L.length() >= min_length) result.push_back(L);
  }
  std::sort(result.begin(), result.end(), [](const Ladder& a, const Ladder& b) {
    return catenate(a.top_rail, a.bottom_rail) < catenate(b.top_rail, b.bottom_rail);
  });
  return result;
}

LadderClass classify(const Graph& g, const Ladder& L) {
  check_ladder(g, L);
  std::set<Vertex> comp;
  for (const auto& c : connected_components(g))
    if (c.count(L.top_rail.front())) {
      comp = c;
      break;
    }
  Graph host = comp.size() == g.num_vertices() ? g : induced_subgraph(g, comp);

  auto square_cuts = [&](int i) {
    std::vector<Edge> rails{make_edge(L.top_rail[i], L.top_rail[i + 1]),
                            make_edge(L.bottom_rail[i], L.bottom_rail[i + 1])};
    return is_edge_cut(host, rails).has_value();
  };
  LadderClass result;
  result.disconnecting = square_cuts(0);
  for (int i = 1; i < L.length(); ++i)
    if (square_cuts(i) != result.disconnecting)
      throw Error("squares of one ladder disagree about disconnection");
  for (Vertex v : L.cornerpoints())
    if (g.degree(v) == 2) result.degree2_cornerpoints.push_back(v);
  std::sort(result.degree2_cornerpoints.begin(), result.degree2_cornerpoints.end());
  result.degree2_cornerpoints.erase(
      std::unique(result.degree2_cornerpoints.begin(), result.degree2_cornerpoints.end()),
      result.degree2_cornerpoints.end());
  result.tw3_certified = L.length() >= 2 && !result.disconnecting;
  return result;
}

std::pair<Graph, Ladder> shorten(const Graph& g, const Ladder& L, int target) {
  if (target < 1 || target > L.length())
    throw PreconditionError("target length " + std::to_string(target) +
                            " not in 1.." + std::to_string(L.length()));
  Graph h = g;
  Ladder cur = L;
  while (cur.length() > target) {
    h = contract_edge_into(h, {cur.top_rail[0], cur.top_rail[1]}, cur.top_rail[0]);
    h = contract_edge_into(h, {cur.bottom_rail[0], cur.bottom_rail[1]}, cur.bottom_rail[0]);
    cur.top_rail.erase(cur.top_rail.begin() + 1);
    cur.bottom_rail.erase(cur.bottom_rail.begin() + 1);
  }
  return {std::move(h), std::move(cur)};
}

namespace {

// Replaces square i's rail edges by paths through two fresh vertices joined
// by a rung, turning square i into two squares.
void insert_rung(Graph& g, Ladder& L, int i, Vertex& created_top, Vertex& created_bottom) {
  Vertex u = L.top_rail[i], w = L.top_rail[i + 1];
  Vertex v = L.bottom_rail[i], x = L.bottom_rail[i + 1];
  g.remove_edge(u, w);
  g.remove_edge(v, x);
  created_top = g.add_vertex();
  created_bottom = g.add_vertex();
  g.add_edge(u, created_top);
  g.add_edge(created_top, w);
  g.add_edge(v, created_bottom);
  g.add_edge(created_bottom, x);
  g.add_edge(created_top, created_bottom);
  L.top_rail.insert(L.top_rail.begin() + i + 1, created_top);
  L.bottom_rail.insert(L.bottom_rail.begin() + i + 1, created_bottom);
}

}  // namespace

std::pair<Graph, Ladder> lengthen(const Graph& g, const Ladder& L, int extra) {
  if (extra < 1) throw PreconditionError("extra must be >= 1");
  Graph h = g;
  Ladder cur = L;
  for (int round = 0; round < extra; ++round) {
    Vertex t, b;
    insert_rung(h, cur, cur.length() - 1, t, b);
  }
  return {std::move(h), std::move(cur)};
}

DecompositionExtension extend_decomposition_square(const Graph& g,
                                                   const TreeDecomposition& td,
                                                   const Ladder& L, int bag_index) {
  if (bag_index < 0 || bag_index >= static_cast<int>(td.bags.size()))
    throw PreconditionError("bag index " + std::to_string(bag_index) + " out of range");
  const auto& bag = td.bags[bag_index];
  int square = -1;
  for (int i = 0; i < L.length(); ++i)
    if (bag.count(L.top_rail[i]) && bag.count(L.top_rail[i + 1]) &&
        bag.count(L.bottom_rail[i]) && bag.count(L.bottom_rail[i + 1])) {
      square = i;
      break;
    }
  if (square < 0)
    throw PreconditionError("bag " + std::to_string(bag_index) +
                            " does not contain a full square of the ladder");

  DecompositionExtension out{g, td, L};
  Vertex u = L.top_rail[square], w = L.top_rail[square + 1];
  Vertex v = L.bottom_rail[square], x = L.bottom_rail[square + 1];
  Vertex ut, vb;
  insert_rung(out.graph, out.ladder, square, ut, vb);
  int b1 = static_cast<int>(out.td.bags.size());
  out.td.bags.push_back({ut, u, v, w, x});
  out.td.tree_edges.emplace_back(bag_index, b1);
  out.td.bags.push_back({ut, vb, v, w, x});
  out.td.tree_edges.emplace_back(b1, b1 + 1);
  return out;
}

DecompositionExtension extend_decomposition_pointed(const Graph& g,
                                                    const TreeDecomposition& td,
                                                    const Ladder& L) {
  check_ladder(g, L);

  const Ladder views[4] = {
      L,
      {L.bottom_rail, L.top_rail},
      {{L.top_rail.rbegin(), L.top_rail.rend()}, {L.bottom_rail.rbegin(), L.bottom_rail.rend()}},
      {{L.bottom_rail.rbegin(), L.bottom_rail.rend()}, {L.top_rail.rbegin(), L.top_rail.rend()}}};
  const Ladder* oriented = nullptr;
  for (const Ladder& view : views)
    if (g.degree(view.top_rail.back()) == 2) {
      oriented = &view;
      break;
    }
  if (!oriented) throw PreconditionError("no cornerpoint has degree 2");

  std::size_t k = oriented->top_rail.size() - 1;
  Vertex c = oriented->top_rail[k];
  Vertex d = oriented->bottom_rail[k];
  Vertex w = oriented->top_rail[k - 1];
  Vertex x = oriented->bottom_rail[k - 1];

  DecompositionExtension out{suppress_degree2(g, c), td, *oriented};
  // c is gone; d plays the paper's fused cornerpoint role in every bag.
  for (auto& bag : out.td.bags)
    if (bag.erase(c)) bag.insert(d);

  int triangle = -1;
  for (int i = 0; i < static_cast<int>(out.td.bags.size()); ++i)
    if (out.td.bags[i].count(w) && out.td.bags[i].count(x) && out.td.bags[i].count(d)) {
      triangle = i;
      break;
    }
  if (triangle < 0)
    throw PreconditionError("no bag holds the fused triangle; decomposition not valid?");

  Vertex wp = out.graph.add_vertex();
  Vertex xp = out.graph.add_vertex();
  out.graph.remove_edge(w, d);
  out.graph.remove_edge(x, d);
  out.graph.add_edge(w, wp);
  out.graph.add_edge(x, xp);
  out.graph.add_edge(wp, xp);
  out.graph.add_edge(wp, d);
  out.graph.add_edge(xp, d);

  int b1 = static_cast<int>(out.td.bags.size());
  out.td.bags.push_back({w, x, wp, d});
  out.td.tree_edges.emplace_back(triangle, b1);
  out.td.bags.push_back({x, wp, xp, d});
  out.td.tree_edges.emplace_back(b1, b1 + 1);

  Vertex fresh_corner;
  out.graph = subdivide_edge(out.graph, {wp, d}, fresh_corner);
  out.td.bags.push_back({wp, d, fresh_corner});
  out.td.tree_edges.emplace_back(b1 + 1, b1 + 2);

  out.ladder.top_rail[k] = wp;
  out.ladder.top_rail.push_back(fresh_corner);
  out.ladder.bottom_rail[k] = xp;
  out.ladder.bottom_rail.push_back(d);
  return out;
}

}  // namespace twkit
