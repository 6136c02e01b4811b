#include "twkit/gen.hpp"

#include <random>

namespace twkit {

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw PreconditionError("grid needs positive dimensions");
  Graph g;
  for (int i = 0; i < rows * cols; ++i) g.add_vertex(i);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

Graph circular_ladder(int n) {
  if (n < 3) throw PreconditionError("circular ladder needs cycles of length >= 3");
  Graph g;
  for (int i = 0; i < 2 * n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g;
  for (int i = 0; i < 10; ++i) g.add_vertex(i);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph wagner_graph() {
  Graph g;
  for (int i = 0; i < 8; ++i) g.add_vertex(i);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("need at least one vertex");
  std::mt19937_64 rng(seed);
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 1; i < n; ++i) g.add_edge(i, static_cast<Vertex>(rng() % i));
  int placed = 0;
  for (int attempt = 0; placed < extra_edges && attempt < 32 * extra_edges + 64; ++attempt) {
    auto u = static_cast<Vertex>(rng() % n);
    auto v = static_cast<Vertex>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++placed;
  }
  return g;
}

namespace {

// Gadget on one end of the strip, touching only the two given cornerpoints.
void attach_end_gadget(Graph& g, Vertex p, Vertex q, std::uint64_t pick) {
  switch (pick % 3) {
    case 0: {  // pendant
      Vertex w = g.add_vertex();
      g.add_edge(w, pick % 2 ? p : q);
      break;
    }
    case 1: {  // triangle over the rung
      Vertex w = g.add_vertex();
      g.add_edge(w, p);
      g.add_edge(w, q);
      break;
    }
    default: {  // path between the cornerpoints, long enough not to spawn a square
      Vertex w1 = g.add_vertex();
      Vertex w2 = g.add_vertex();
      Vertex w3 = g.add_vertex();
      g.add_edge(p, w1);
      g.add_edge(w1, w2);
      g.add_edge(w2, w3);
      g.add_edge(w3, q);
      break;
    }
  }
}

}  // namespace

Planted plant_ladder(int length, PlantStyle style, std::uint64_t seed) {
  if (length < 1) throw PreconditionError("ladder length must be >= 1");
  std::mt19937_64 rng(seed);

  Planted out;
  int cols = length + 1;
  for (int i = 0; i < 2 * cols; ++i) out.graph.add_vertex(i);
  for (int i = 0; i + 1 < cols; ++i) {
    out.graph.add_edge(i, i + 1);
    out.graph.add_edge(cols + i, cols + i + 1);
  }
  for (int i = 0; i < cols; ++i) out.graph.add_edge(i, cols + i);
  for (int i = 0; i < cols; ++i) {
    out.ladder.top_rail.push_back(i);
    out.ladder.bottom_rail.push_back(cols + i);
  }
  auto [a, b, c, d] = out.ladder.cornerpoints();

  if (style == PlantStyle::split) {
    attach_end_gadget(out.graph, a, b, rng());
    attach_end_gadget(out.graph, c, d, rng());
    return out;
  }

  // Outside path joining the two ends; long hosts get the minimal path to
  // save vertices, very short ones a longer path so no stray square appears.
  int middle = length >= 9 ? 1
               : length <= 2 ? 2 + static_cast<int>(rng() % 2)
                             : 1 + static_cast<int>(rng() % 3);
  Vertex from = rng() % 2 ? a : b;
  Vertex to = rng() % 2 ? c : d;
  Vertex prev = from;
  Vertex first_middle = -1;
  for (int i = 0; i < middle; ++i) {
    Vertex w = out.graph.add_vertex();
    if (first_middle < 0) first_middle = w;
    out.graph.add_edge(prev, w);
    prev = w;
  }
  out.graph.add_edge(prev, to);

  if (style == PlantStyle::weighty) {
    // Clique block glued at a bypass vertex keeps the width at 4 everywhere.
    Vertex glue = first_middle;
    std::array<Vertex, 4> fresh{};
    for (auto& w : fresh) w = out.graph.add_vertex();
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      out.graph.add_edge(glue, fresh[i]);
      for (std::size_t j = i + 1; j < fresh.size(); ++j) out.graph.add_edge(fresh[i], fresh[j]);
    }
  } else if (length <= 6 && rng() % 2) {
    Vertex w = out.graph.add_vertex();
    out.graph.add_edge(w, rng() % 2 ? a : d);
  }
  return out;
}

}  // namespace twkit
