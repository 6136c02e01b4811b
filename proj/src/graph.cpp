#include "twkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stack>

namespace twkit {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  std::ostringstream os;
  os << "(" << u << "," << v << ")";
  return os.str();
}

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw PreconditionError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& [v, nb] : adj_) twice += nb.size();
  return twice / 2;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, nb] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (const auto& [v, nb] : adj_)
    for (Vertex w : nb)
      if (v < w) out.emplace_back(v, w);
  return out;
}

Vertex Graph::add_vertex() {
  Vertex v = next_id_++;
  adj_[v];
  return v;
}

void Graph::add_vertex(Vertex v) {
  adj_[v];
  if (v >= next_id_) next_id_ = v + 1;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (!has_vertex(u)) throw PreconditionError("unknown vertex " + std::to_string(u));
  if (!has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) throw PreconditionError("missing edge " + edge_str(u, v));
  adj_[u].erase(v);
  adj_[v].erase(u);
}

void Graph::remove_vertex(Vertex v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw PreconditionError("unknown vertex " + std::to_string(v));
  for (Vertex w : it->second) adj_[w].erase(v);
  adj_.erase(it);
  labels_.erase(v);
}

std::optional<std::string> Graph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

void Graph::set_label(Vertex v, const std::string& text) {
  if (!has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  labels_[v] = text;
}

void Graph::clear_label(Vertex v) { labels_.erase(v); }

Graph build_graph(const std::vector<Edge>& edges,
                  const std::map<Vertex, std::string>& labels) {
  Graph g;
  std::set<Edge> seen;
  for (const auto& [u, v] : edges) {
    if (u == v)
      throw MalformedInputError("self-loop " + edge_str(u, v));
    if (!seen.insert(make_edge(u, v)).second)
      throw MalformedInputError("duplicate edge " + edge_str(u, v));
    g.add_vertex(u);
    g.add_vertex(v);
    g.add_edge(u, v);
  }
  std::map<std::string, Vertex> by_text;
  for (const auto& [v, text] : labels) {
    auto [it, fresh] = by_text.emplace(text, v);
    if (!fresh)
      throw MalformedInputError("label \"" + text + "\" used for vertices " +
                                std::to_string(it->second) + " and " + std::to_string(v));
    g.add_vertex(v);
    g.set_label(v, text);
  }
  return g;
}

namespace {

// Is g minus `drop` a forest?
bool acyclic_without(const Graph& g, Vertex drop) {
  std::map<Vertex, Vertex> parent;
  std::function<Vertex(Vertex)> find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Vertex v : g.vertices())
    if (v != drop) parent[v] = v;
  for (const auto& [u, v] : g.edges()) {
    if (u == drop || v == drop) continue;
    Vertex ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

}  // namespace

bool can_suppress_safely(const Graph& g, Vertex v) {
  if (!g.has_vertex(v) || g.degree(v) != 2) return false;
  auto it = g.neighbors(v).begin();
  Vertex p = *it++;
  Vertex q = *it;
  if (!g.has_edge(p, q)) return true;
  return !acyclic_without(g, v);
}

Graph suppress_degree2(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  if (g.degree(v) != 2)
    throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.degree(v)) + ", expected 2");
  auto it = g.neighbors(v).begin();
  Vertex p = *it++;
  Vertex q = *it;
  Graph h = g;
  if (h.has_edge(p, q)) {
    // v closes a triangle with p,q: deleting it is only treewidth-safe if a
    // cycle survives elsewhere.
    if (acyclic_without(g, v))
      throw GuardedError("suppressing vertex " + std::to_string(v) +
                         " would remove the graph's only cycle");
    h.remove_vertex(v);
  } else {
    h.remove_vertex(v);
    h.add_edge(p, q);
  }
  return h;
}

Graph subdivide_edge(const Graph& g, Edge e) {
  Vertex ignored;
  return subdivide_edge(g, e, ignored);
}

Graph subdivide_edge(const Graph& g, Edge e, Vertex& created) {
  if (!g.has_edge(e.first, e.second))
    throw PreconditionError("missing edge " + edge_str(e.first, e.second));
  Graph h = g;
  h.remove_edge(e.first, e.second);
  created = h.add_vertex();
  h.add_edge(e.first, created);
  h.add_edge(created, e.second);
  return h;
}

Graph contract_edge(const Graph& g, Edge e) {
  return contract_edge_into(g, e, std::min(e.first, e.second));
}

Graph contract_edge_into(const Graph& g, Edge e, Vertex keep) {
  if (!g.has_edge(e.first, e.second))
    throw PreconditionError("missing edge " + edge_str(e.first, e.second));
  if (keep != e.first && keep != e.second)
    throw PreconditionError("kept vertex " + std::to_string(keep) +
                            " is not an endpoint of " + edge_str(e.first, e.second));
  Vertex gone = (keep == e.first) ? e.second : e.first;
  Graph h = g;
  for (Vertex w : g.neighbors(gone))
    if (w != keep) h.add_edge(keep, w);
  h.remove_vertex(gone);  // label of `gone` is dropped
  return h;
}

std::vector<std::set<Vertex>> connected_components(const Graph& g) {
  std::vector<std::set<Vertex>> comps;
  std::set<Vertex> seen;
  for (Vertex root : g.vertices()) {
    if (seen.count(root)) continue;
    std::set<Vertex> comp;
    std::stack<Vertex> todo;
    todo.push(root);
    seen.insert(root);
    while (!todo.empty()) {
      Vertex v = todo.top();
      todo.pop();
      comp.insert(v);
      for (Vertex w : g.neighbors(v))
        if (seen.insert(w).second) todo.push(w);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<EdgeCut> is_edge_cut(const Graph& g, const std::vector<Edge>& edges) {
  if (!is_connected(g)) throw PreconditionError("is_edge_cut requires a connected graph");
  std::set<Edge> cut;
  for (const auto& [u, v] : edges) {
    if (!g.has_edge(u, v)) throw PreconditionError("missing edge " + edge_str(u, v));
    cut.insert(make_edge(u, v));
  }
  if (cut.empty()) return std::nullopt;
  Graph h = g;
  for (const auto& [u, v] : cut) h.remove_edge(u, v);
  auto comps = connected_components(h);
  if (comps.size() < 2) return std::nullopt;
  EdgeCut result;
  result.edges.assign(cut.begin(), cut.end());
  Vertex anchor = result.edges.front().first;
  for (const auto& comp : comps) {
    if (comp.count(anchor))
      result.side_a = comp;
    else
      result.side_b.insert(comp.begin(), comp.end());
  }
  return result;
}

std::vector<std::set<Vertex>> biconnected_components(const Graph& g) {
  std::vector<std::set<Vertex>> blocks;
  std::map<Vertex, int> disc, low;
  std::vector<Edge> estack;
  int timer = 0;

  // Neighbor vectors for index-based iterative DFS.
  std::map<Vertex, std::vector<Vertex>> nb;
  for (Vertex v : g.vertices()) {
    const auto& s = g.neighbors(v);
    nb[v].assign(s.begin(), s.end());
  }

  auto pop_block = [&](const Edge& top) {
    std::set<Vertex> block;
    while (true) {
      Edge e = estack.back();
      estack.pop_back();
      block.insert(e.first);
      block.insert(e.second);
      if (e == top) break;
    }
    blocks.push_back(std::move(block));
  };

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next = 0;
  };

  for (Vertex root : g.vertices()) {
    if (disc.count(root)) continue;
    if (g.degree(root) == 0) {
      blocks.push_back({root});
      continue;
    }
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < nb[f.v].size()) {
        Vertex w = nb[f.v][f.next++];
        if (w == f.parent) continue;
        if (!disc.count(w)) {
          estack.push_back(make_edge(f.v, w));
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v});
        } else if (disc[w] < disc[f.v]) {
          estack.push_back(make_edge(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Vertex v = f.v, parent = f.parent;
        stack.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) pop_block(make_edge(parent, v));
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return blocks;
}

Graph induced_subgraph(const Graph& g, const std::set<Vertex>& keep) {
  Graph h;
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
    h.add_vertex(v);
    if (auto text = g.label(v)) h.set_label(v, *text);
  }
  for (Vertex v : keep)
    for (Vertex w : g.neighbors(v))
      if (v < w && keep.count(w)) h.add_edge(v, w);
  return h;
}

}  // namespace twkit
