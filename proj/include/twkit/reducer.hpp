#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twkit/decomposition.hpp"
#include "twkit/graph.hpp"
#include "twkit/ladder.hpp"

namespace twkit {

struct ReductionPolicy {
  // Unconditional shortening floor; lengths 4 and up are safe at any width.
  int general_target = 4;
  // Harder floor usable once the shortened graph certifies width >= 4.
  int aggressive_target = 3;
  bool allow_aggressive = false;
  bool suppress_degree2 = false;
  // When false, stop after the first rewrite instead of reaching a fixpoint.
  bool iterate_to_fixpoint = true;
};

enum class Rule {
  disconnecting,        // rail edges form an edge cut: shorten to 1
  degree2_cornerpoint,  // degree-2 cornerpoint, candidate keeps width >= 3: shorten to 1
  aggressive,           // candidate certifies width >= 4: shorten to aggressive_target
  general,              // shorten to general_target, no certificate needed
  suppress,             // remove one safely suppressible degree-2 vertex
};

const char* rule_name(Rule r);

struct ReductionStep {
  Rule rule = Rule::general;
  // Embedding in the graph state the step was applied to; empty for suppress.
  Ladder ladder;
  Vertex suppressed = -1;  // Rule::suppress only
  int length_before = 0;
  int length_after = 0;
  std::string note;
};

struct ReductionReport {
  std::vector<ReductionStep> steps;
  std::size_t vertices_before = 0;
  std::size_t vertices_after = 0;
  // Certification evidence used by gated rules, plus notes for gated rules
  // that were requested but refused.
  std::vector<std::string> tw_certificates;
};

struct Certificate {
  std::string method;
  int bound = 0;  // certified treewidth >= bound
};

// Evidence that tw(g) >= k: cheap combinatorial bounds, a held
// non-disconnecting ladder for k <= 3, then the exact engine under `budget`.
// Empty when nothing proves the bound; never a false positive.
std::optional<Certificate> certify_tw_at_least(const Graph& g, int k,
                                               const OracleBudget& budget = {});

// Applies the width-preserving shortening rules per ladder in canonical order,
// first applicable rule wins, re-detecting after every rewrite.  Gated rules
// certify on the shortened candidate graph, so a rewrite that would lower the
// width is refused rather than applied.
std::pair<Graph, ReductionReport> reduce(const Graph& g, const ReductionPolicy& policy = {});

// Re-applies the recorded steps to the original input, reproducing the output.
Graph replay(const Graph& input, const ReductionReport& report);

}  // namespace twkit
