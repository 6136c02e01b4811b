#include "twkit/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <unordered_map>

#include "twkit/ladder.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twkit {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::tw1: return "tw1";
    case Axiom::tw2: return "tw2";
    case Axiom::tw3: return "tw3";
  }
  return "?";
}

namespace {

std::string vertex_str(Vertex v) { return std::to_string(v); }

// Throws StructureError unless tree_edges is a tree over all bag indices.
std::vector<std::vector<int>> bag_tree_adjacency(const TreeDecomposition& td) {
  int b = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> adj(b);
  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : td.tree_edges) {
    if (x < 0 || x >= b || y < 0 || y >= b)
      throw StructureError("tree edge (" + std::to_string(x) + "," + std::to_string(y) +
                           ") references a missing bag");
    if (x == y) throw StructureError("tree edge loops on bag " + std::to_string(x));
    if (!seen.insert(std::minmax(x, y)).second)
      throw StructureError("duplicate tree edge (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  if (b == 0) return adj;
  if (static_cast<int>(seen.size()) != b - 1)
    throw StructureError("bag graph has " + std::to_string(seen.size()) + " edges, a tree on " +
                         std::to_string(b) + " bags needs " + std::to_string(b - 1));
  std::vector<char> reached(b, 0);
  std::vector<int> todo{0};
  reached[0] = 1;
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (int y : adj[x])
      if (!reached[y]) {
        reached[y] = 1;
        todo.push_back(y);
      }
  }
  for (int i = 0; i < b; ++i)
    if (!reached[i]) throw StructureError("bag graph is disconnected");
  return adj;
}

}  // namespace

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
  auto tree_adj = bag_tree_adjacency(td);
  ValidationReport report;

  std::map<Vertex, std::vector<int>> occurrences;  // graph vertices only
  std::map<Vertex, int> foreign;                   // vertex -> first offending bag
  for (int i = 0; i < static_cast<int>(td.bags.size()); ++i)
    for (Vertex w : td.bags[i]) {
      if (g.has_vertex(w))
        occurrences[w].push_back(i);
      else
        foreign.emplace(w, i);
    }

  for (auto [w, bag] : foreign) {
    Violation v{Axiom::tw1, w, std::nullopt,
                "bag " + std::to_string(bag) + " contains " + vertex_str(w) +
                    ", which is not a vertex of the graph"};
    report.violations.push_back(std::move(v));
  }
  for (Vertex v : g.vertices())
    if (!occurrences.count(v))
      report.violations.push_back(
          {Axiom::tw1, v, std::nullopt, "vertex " + vertex_str(v) + " appears in no bag"});
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : td.bags)
      if (bag.count(u) && bag.count(v)) {
        covered = true;
        break;
      }
    if (!covered)
      report.violations.push_back({Axiom::tw2, std::nullopt, Edge{u, v},
                                   "edge (" + vertex_str(u) + "," + vertex_str(v) +
                                       ") is inside no bag"});
  }
  for (const auto& [v, occ] : occurrences) {
    if (occ.size() < 2) continue;
    std::set<int> members(occ.begin(), occ.end());
    std::set<int> reached{occ.front()};
    std::vector<int> todo{occ.front()};
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (int y : tree_adj[x])
        if (members.count(y) && reached.insert(y).second) todo.push_back(y);
    }
    if (reached.size() != members.size()) {
      std::size_t parts = 1;
      for (int x : members)
        if (!reached.count(x)) {
          // count remaining components
          ++parts;
          reached.insert(x);
          std::vector<int> t2{x};
          while (!t2.empty()) {
            int y = t2.back();
            t2.pop_back();
            for (int z : tree_adj[y])
              if (members.count(z) && reached.insert(z).second) t2.push_back(z);
          }
        }
      report.violations.push_back({Axiom::tw3, v, std::nullopt,
                                   "bags containing " + vertex_str(v) + " form " +
                                       std::to_string(parts) + " separate subtrees"});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

TreeDecomposition decomposition_from_ordering(const Graph& g,
                                              const std::vector<Vertex>& order) {
  std::set<Vertex> check(order.begin(), order.end());
  if (check.size() != order.size() || check.size() != g.num_vertices() ||
      std::any_of(order.begin(), order.end(), [&](Vertex v) { return !g.has_vertex(v); }))
    throw PreconditionError("order is not a permutation of the vertex set");

  int n = static_cast<int>(order.size());
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::map<Vertex, int> pos;
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::map<Vertex, std::set<Vertex>> adj;
  for (Vertex v : g.vertices()) adj[v] = g.neighbors(v);

  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::set<Vertex> later = adj[v];
    std::set<Vertex> bag = later;
    bag.insert(v);
    td.bags.push_back(bag);
    if (!later.empty()) {
      int parent = n;
      for (Vertex u : later) parent = std::min(parent, pos[u]);
      td.tree_edges.emplace_back(i, parent);
      for (Vertex a : later)
        for (Vertex b : later)
          if (a < b) {
            adj[a].insert(b);
            adj[b].insert(a);
          }
    } else if (i < n - 1) {
      td.tree_edges.emplace_back(i, i + 1);
    }
    for (Vertex u : later) adj[u].erase(v);
    adj.erase(v);
  }
  return td;
}

namespace {

std::vector<Vertex> min_fill_order(const Graph& g) {
  std::map<Vertex, std::set<Vertex>> adj;
  for (Vertex v : g.vertices()) adj[v] = g.neighbors(v);
  std::vector<Vertex> order;
  order.reserve(adj.size());
  while (!adj.empty()) {
    Vertex pick = -1;
    long best = -1;
    for (const auto& [v, nb] : adj) {
      long fill = 0;
      for (auto it = nb.begin(); it != nb.end(); ++it)
        for (auto jt = std::next(it); jt != nb.end(); ++jt)
          if (!adj[*it].count(*jt)) ++fill;
      if (best < 0 || fill < best) {
        best = fill;
        pick = v;
      }
    }
    const auto nb = adj[pick];
    for (Vertex a : nb)
      for (Vertex b : nb)
        if (a < b) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
    for (Vertex a : nb) adj[a].erase(pick);
    adj.erase(pick);
    order.push_back(pick);
  }
  return order;
}

int degeneracy(const Graph& g) {
  std::map<Vertex, std::set<Vertex>> adj;
  for (Vertex v : g.vertices()) adj[v] = g.neighbors(v);
  int best = 0;
  while (!adj.empty()) {
    Vertex pick = adj.begin()->first;
    std::size_t deg = adj.begin()->second.size();
    for (const auto& [v, nb] : adj)
      if (nb.size() < deg) {
        deg = nb.size();
        pick = v;
      }
    best = std::max(best, static_cast<int>(deg));
    for (Vertex u : adj[pick]) adj[u].erase(pick);
    adj.erase(pick);
  }
  return best;
}

// Repeatedly contracts a minimum-degree vertex into its minimum-degree
// neighbour; the largest minimum degree seen is a treewidth lower bound.
int contraction_min_width(const Graph& g) {
  std::map<Vertex, std::set<Vertex>> adj;
  for (Vertex v : g.vertices()) adj[v] = g.neighbors(v);
  int best = 0;
  while (adj.size() >= 2) {
    Vertex v = adj.begin()->first;
    std::size_t deg = adj.begin()->second.size();
    for (const auto& [w, nb] : adj)
      if (nb.size() < deg) {
        deg = nb.size();
        v = w;
      }
    if (deg == 0) {
      adj.erase(v);
      continue;
    }
    best = std::max(best, static_cast<int>(deg));
    Vertex u = *adj[v].begin();
    for (Vertex w : adj[v])
      if (adj[w].size() < adj[u].size()) u = w;
    for (Vertex w : adj[u]) {
      adj[w].erase(u);
      if (w != v) {
        adj[w].insert(v);
        adj[v].insert(w);
      }
    }
    adj[v].erase(u);
    adj.erase(u);
  }
  return best;
}

int greedy_clique(const Graph& g) {
  int best = 0;
  for (Vertex v : g.vertices()) {
    std::vector<Vertex> cand(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
      auto da = g.degree(a), db = g.degree(b);
      return da != db ? da > db : a < b;
    });
    std::set<Vertex> clique{v};
    for (Vertex u : cand) {
      bool fits = true;
      for (Vertex w : clique)
        if (!g.has_edge(u, w)) {
          fits = false;
          break;
        }
      if (fits) clique.insert(u);
    }
    best = std::max(best, static_cast<int>(clique.size()) - 1);
  }
  return best;
}

}  // namespace

int lower_bound(const Graph& g) {
  if (g.num_vertices() == 0) return -1;
  int best = std::max({degeneracy(g), contraction_min_width(g), greedy_clique(g)});
  if (best < 3) {
    for (const auto& comp : connected_components(g)) {
      if (comp.size() < 6) continue;
      Graph sub = induced_subgraph(g, comp);
      for (const Ladder& L : find_ladders(sub, 2))
        if (!classify(sub, L).disconnecting) {
          best = 3;
          break;
        }
      if (best >= 3) break;
    }
  }
  return best;
}

TreeDecomposition upper_bound_heuristic(const Graph& g) {
  return decomposition_from_ordering(g, min_fill_order(g));
}

// ---------------------------------------------------------------------------
// Exact engine: subset DP over elimination orderings, per biconnected block.

namespace {

constexpr std::uint8_t kInf = 0xFF;

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;

  bool expired() const { return at && Clock::now() >= *at; }
};

struct Dense {
  int n = 0;
  std::vector<Vertex> ids;             // index -> vertex id, ascending
  std::vector<std::uint64_t> adj;      // neighbour mask per index
};

Dense densify(const Graph& g) {
  Dense d;
  d.ids = g.vertices();
  d.n = static_cast<int>(d.ids.size());
  std::map<Vertex, int> index;
  for (int i = 0; i < d.n; ++i) index[d.ids[i]] = i;
  d.adj.assign(d.n, 0);
  for (const auto& [u, v] : g.edges()) {
    d.adj[index[u]] |= std::uint64_t(1) << index[v];
    d.adj[index[v]] |= std::uint64_t(1) << index[u];
  }
  return d;
}

// Vertices outside placed|{v} seen from v through placed vertices; their
// count is the degree v would have after eliminating `placed`.
int q_size(const Dense& d, std::uint64_t placed, int v) {
  std::uint64_t reach = std::uint64_t(1) << v;
  std::uint64_t frontier = reach;
  std::uint64_t out = 0;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= d.adj[std::countr_zero(f)];
    next &= ~reach;
    reach |= next;
    out |= next & ~placed;
    frontier = next & placed;
  }
  return std::popcount(out);
}

// dp[S] = best elimination width over prefixes that eliminate exactly S,
// clipped to kInf at `ub` (a known upper bound makes those entries useless).
inline std::uint8_t dp_cell(const Dense& d, const std::vector<std::uint8_t>& dp,
                            std::uint64_t S, int ub) {
  int best = kInf;
  for (std::uint64_t rest = S; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    std::uint64_t prev_mask = S & ~(std::uint64_t(1) << v);
    std::uint8_t prev = dp[prev_mask];
    if (prev >= best) continue;
    int cost = std::max<int>(prev, q_size(d, prev_mask, v));
    if (cost < best) best = cost;
  }
  return best < ub ? static_cast<std::uint8_t>(best) : kInf;
}

// Reference path: one pass over all masks in ascending numeric order.
bool dp_ascending(const Dense& d, int ub, std::vector<std::uint8_t>& dp,
                  const Deadline& deadline) {
  std::size_t full = std::size_t(1) << d.n;
  dp.assign(full, kInf);
  dp[0] = 0;
  for (std::size_t s = 1; s < full; ++s) {
    if ((s & 0xFFFF) == 0 && deadline.expired()) return false;
    dp[s] = dp_cell(d, dp, s, ub);
  }
  return true;
}

struct Binomials {
  std::uint64_t c[65][65] = {};

  Binomials() {
    for (int i = 0; i <= 64; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
  }
};

std::uint64_t next_same_popcount(std::uint64_t s) {
  std::uint64_t t = s | (s - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(s) + 1));
}

// r-th mask (ascending numeric order) among k-bit subsets of n positions.
std::uint64_t unrank_subset(int n, int k, std::uint64_t r, const Binomials& b) {
  std::uint64_t s = 0;
  int hi = n;
  for (int i = k; i >= 1; --i) {
    int p = i - 1;
    while (p + 1 < hi && b.c[p + 1][i] <= r) ++p;
    r -= b.c[p][i];
    s |= std::uint64_t(1) << p;
    hi = p;
  }
  return s;
}

// Parallel path: cardinality layers; each layer only reads the one below, so
// chunks are independent and the table is identical to the reference path's.
bool dp_layered(const Dense& d, int ub, std::vector<std::uint8_t>& dp,
                const Deadline& deadline) {
  static const Binomials binom;
  std::size_t full = std::size_t(1) << d.n;
  dp.assign(full, kInf);
  dp[0] = 0;
  std::atomic<bool> stop{false};
  for (int layer = 1; layer <= d.n; ++layer) {
    std::uint64_t total = binom.c[d.n][layer];
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::uint64_t chunk = std::max<std::uint64_t>((total + threads * 8 - 1) / (threads * 8), 1024);
    std::int64_t chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t ci = 0; ci < chunks; ++ci) {
      if (stop.load(std::memory_order_relaxed)) continue;
      std::uint64_t begin = ci * chunk;
      std::uint64_t count = std::min<std::uint64_t>(chunk, total - begin);
      std::uint64_t s = unrank_subset(d.n, layer, begin, binom);
      for (std::uint64_t i = 0; i < count; ++i) {
        if ((i & 0xFFF) == 0xFFF && deadline.expired()) {
          stop.store(true, std::memory_order_relaxed);
          break;
        }
        dp[s] = dp_cell(d, dp, s, ub);
        if (i + 1 < count) s = next_same_popcount(s);
      }
    }
    if (stop.load()) return false;
  }
  return true;
}

std::vector<Vertex> backtrack_ordering(const Dense& d, const std::vector<std::uint8_t>& dp) {
  std::uint64_t s = (std::uint64_t(1) << d.n) - 1;
  std::vector<Vertex> order(d.n);
  for (int i = d.n - 1; i >= 0; --i) {
    int val = dp[s];
    bool found = false;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint64_t prev_mask = s & ~(std::uint64_t(1) << v);
      std::uint8_t prev = dp[prev_mask];
      if (prev == kInf || prev > val) continue;
      if (std::max<int>(prev, q_size(d, prev_mask, v)) == val) {
        order[i] = d.ids[v];
        s = prev_mask;
        found = true;
        break;
      }
    }
    if (!found) throw Error("elimination table lost its optimum");
  }
  return order;
}

struct BranchBound {
  const Dense& d;
  std::uint64_t full;
  int ub;                    // best width so far; shrinks as leaves improve
  std::vector<int> best;     // ordering achieving ub, if improved
  bool improved = false;
  std::unordered_map<std::uint64_t, int> seen;
  std::uint64_t nodes = 0;
  std::uint64_t node_limit;  // 0 = unlimited
  Deadline deadline;
  bool stopped = false;
  std::vector<int> prefix;

  BranchBound(const Dense& dense, int start_ub, std::uint64_t limit, Deadline dl)
      : d(dense), full((std::uint64_t(1) << dense.n) - 1), ub(start_ub),
        node_limit(limit), deadline(dl) {}

  void run() { descend(0, 0); }

  void descend(std::uint64_t placed, int cost) {
    if (stopped) return;
    if (++nodes % 4096 == 0 && deadline.expired()) {
      stopped = true;
      return;
    }
    if (node_limit && nodes > node_limit) {
      stopped = true;
      return;
    }
    if (cost >= ub) return;
    if (placed == full) {
      ub = cost;
      best = prefix;
      improved = true;
      return;
    }
    auto [it, fresh] = seen.try_emplace(placed, cost);
    if (!fresh) {
      if (it->second <= cost) return;
      it->second = cost;
    } else if (seen.size() > (std::size_t(1) << 22)) {
      seen.erase(it);  // table full; correctness is unaffected
    }
    std::vector<std::pair<int, int>> cand;  // (q, v), cheapest first
    for (int v = 0; v < d.n; ++v) {
      if (placed & (std::uint64_t(1) << v)) continue;
      cand.emplace_back(q_size(d, placed, v), v);
    }
    std::sort(cand.begin(), cand.end());
    for (auto [q, v] : cand) {
      int next_cost = std::max(cost, q);
      if (next_cost >= ub) break;
      prefix.push_back(v);
      descend(placed | (std::uint64_t(1) << v), next_cost);
      prefix.pop_back();
      if (stopped) return;
    }
  }
};

TreeDecomposition single_bag(std::set<Vertex> bag) {
  TreeDecomposition td;
  td.bags.push_back(std::move(bag));
  return td;
}

TreewidthResult exact_result(int width, TreeDecomposition td) {
  TreewidthResult r;
  r.width = width;
  r.witness = std::move(td);
  r.lower = r.upper = width;
  return r;
}

TreewidthResult unknown_result(int lb, int ub) {
  TreewidthResult r;
  r.lower = lb;
  r.upper = ub;
  return r;
}

struct SuppressedVertex {
  Vertex v, p, q;
};

// Solves one biconnected block (connected, never empty).
TreewidthResult solve_block(const Graph& block, const OracleBudget& budget,
                            const Deadline& deadline, bool layered) {
  if (block.num_vertices() == 1)
    return exact_result(0, single_bag({block.vertices().front()}));
  if (block.num_vertices() == 2)
    return exact_result(1, single_bag({block.vertices()[0], block.vertices()[1]}));

  // A block with >= 3 vertices is a cycle or denser, so treewidth >= 2 and
  // safe degree-2 suppression keeps it unchanged.
  Graph work = block;
  std::vector<SuppressedVertex> undone;
  if (budget.suppress_degree2) {
    bool again = true;
    while (again && work.num_vertices() > 3) {
      again = false;
      for (Vertex v : work.vertices()) {
        if (work.degree(v) != 2 || !can_suppress_safely(work, v)) continue;
        auto it = work.neighbors(v).begin();
        Vertex p = *it++;
        Vertex q = *it;
        work = suppress_degree2(work, v);
        undone.push_back({v, p, q});
        again = true;
        break;
      }
    }
  }

  auto reinsert = [&](TreeDecomposition td) {
    for (auto it = undone.rbegin(); it != undone.rend(); ++it) {
      int host = -1;
      for (int i = 0; i < static_cast<int>(td.bags.size()); ++i)
        if (td.bags[i].count(it->p) && td.bags[i].count(it->q)) {
          host = i;
          break;
        }
      if (host < 0) throw Error("no bag covers a suppressed vertex's neighbours");
      td.bags.push_back({it->p, it->v, it->q});
      td.tree_edges.emplace_back(host, static_cast<int>(td.bags.size()) - 1);
    }
    return td;
  };

  int lb = lower_bound(work);
  TreeDecomposition greedy = upper_bound_heuristic(work);
  int ub = greedy.width();
  if (lb >= ub) return exact_result(ub, reinsert(std::move(greedy)));

  int n = work.num_vertices();
  int dp_cap = std::clamp(budget.dp_max_vertices, 0, 26);
  if (n <= dp_cap) {
    Dense d = densify(work);
    std::vector<std::uint8_t> dp;
    bool finished = layered ? dp_layered(d, ub, dp, deadline)
                            : dp_ascending(d, ub, dp, deadline);
    if (!finished) return unknown_result(lb, ub);
    std::uint8_t found = dp[(std::size_t(1) << n) - 1];
    if (found == kInf) return exact_result(ub, reinsert(std::move(greedy)));
    auto order = backtrack_ordering(d, dp);
    return exact_result(found, reinsert(decomposition_from_ordering(work, order)));
  }

  if (n <= 63) {
    Dense d = densify(work);
    BranchBound bnb(d, ub, budget.bnb_node_limit, deadline);
    bnb.run();
    if (bnb.stopped) return unknown_result(lb, std::min(ub, bnb.ub));
    if (!bnb.improved) return exact_result(ub, reinsert(std::move(greedy)));
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = d.ids[bnb.best[i]];
    return exact_result(bnb.ub, reinsert(decomposition_from_ordering(work, order)));
  }

  return unknown_result(lb, ub);
}

// Appends td to merged, returning the index offset.
int append_decomposition(TreeDecomposition& merged, const TreeDecomposition& td) {
  int offset = static_cast<int>(merged.bags.size());
  for (const auto& bag : td.bags) merged.bags.push_back(bag);
  for (auto [x, y] : td.tree_edges) merged.tree_edges.emplace_back(x + offset, y + offset);
  return offset;
}

TreewidthResult solve_component(const Graph& comp, const OracleBudget& budget,
                                const Deadline& deadline, bool layered) {
  auto blocks = biconnected_components(comp);
  if (blocks.size() == 1) return solve_block(comp, budget, deadline, layered);

  std::vector<TreewidthResult> results;
  results.reserve(blocks.size());
  int width = 0, lb = 0, ub = 0;
  bool all_exact = true;
  for (const auto& block : blocks) {
    results.push_back(solve_block(induced_subgraph(comp, block), budget, deadline, layered));
    const auto& r = results.back();
    lb = std::max(lb, r.lower);
    ub = std::max(ub, r.upper);
    if (r.exact())
      width = std::max(width, *r.width);
    else
      all_exact = false;
  }
  if (!all_exact) return unknown_result(lb, ub);

  // Glue block witnesses at articulation vertices: connecting two bags that
  // both hold the shared vertex keeps its occurrences contiguous.
  TreeDecomposition merged;
  std::map<Vertex, int> first_bag;
  std::vector<char> placed(blocks.size(), 0);
  auto absorb = [&](std::size_t bi, int attach_from, int attach_to) {
    int offset = append_decomposition(merged, *results[bi].witness);
    if (attach_from >= 0) merged.tree_edges.emplace_back(attach_from, attach_to + offset);
    for (int i = 0; i < static_cast<int>(results[bi].witness->bags.size()); ++i)
      for (Vertex v : results[bi].witness->bags[i]) first_bag.emplace(v, offset + i);
    placed[bi] = 1;
  };
  absorb(0, -1, -1);
  for (std::size_t done = 1; done < blocks.size(); ++done) {
    bool advanced = false;
    for (std::size_t bi = 0; bi < blocks.size() && !advanced; ++bi) {
      if (placed[bi]) continue;
      for (Vertex v : blocks[bi]) {
        auto hit = first_bag.find(v);
        if (hit == first_bag.end()) continue;
        int local = -1;
        const auto& bags = results[bi].witness->bags;
        for (int i = 0; i < static_cast<int>(bags.size()); ++i)
          if (bags[i].count(v)) {
            local = i;
            break;
          }
        absorb(bi, hit->second, local);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error("block decompositions do not meet");
  }
  return exact_result(width, std::move(merged));
}

TreewidthResult run_oracle(const Graph& g, const OracleBudget& budget, bool layered) {
  Deadline deadline;
  if (budget.time_limit_seconds > 0)
    deadline.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget.time_limit_seconds));

  if (g.num_vertices() == 0) return exact_result(-1, single_bag({}));

  auto comps = connected_components(g);
  std::vector<TreewidthResult> results;
  results.reserve(comps.size());
  int width = -1, lb = -1, ub = -1;
  bool all_exact = true;
  for (const auto& comp : comps) {
    results.push_back(solve_component(induced_subgraph(g, comp), budget, deadline, layered));
    const auto& r = results.back();
    lb = std::max(lb, r.lower);
    ub = std::max(ub, r.upper);
    if (r.exact())
      width = std::max(width, *r.width);
    else
      all_exact = false;
  }
  if (!all_exact) return unknown_result(lb, ub);

  TreeDecomposition merged;
  for (const auto& r : results) {
    int offset = append_decomposition(merged, *r.witness);
    if (offset > 0) merged.tree_edges.emplace_back(0, offset);
  }
  return exact_result(width, std::move(merged));
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, const OracleBudget& budget) {
  return run_oracle(g, budget, budget.parallel);
}

TreewidthResult exact_treewidth_serial(const Graph& g, const OracleBudget& budget) {
  return run_oracle(g, budget, false);
}

}  // namespace twkit
