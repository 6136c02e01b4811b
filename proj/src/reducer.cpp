#include "twkit/reducer.hpp"

namespace twkit {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::disconnecting: return "disconnecting";
    case Rule::degree2_cornerpoint: return "degree2-cornerpoint";
    case Rule::aggressive: return "aggressive";
    case Rule::general: return "general";
    case Rule::suppress: return "suppress-deg2";
  }
  return "unknown";
}

std::optional<Certificate> certify_tw_at_least(const Graph& g, int k,
                                               const OracleBudget& budget) {
  if (k <= 0) return Certificate{"vacuous", k};
  int lb = lower_bound(g);
  if (lb >= k) return Certificate{"combinatorial lower bound " + std::to_string(lb), lb};
  if (k <= 3)
    for (const Ladder& L : find_ladders(g, 2))
      if (classify(g, L).tw3_certified)
        return Certificate{
            "held non-disconnecting ladder of length " + std::to_string(L.length()), 3};
  auto r = exact_treewidth(g, budget);
  if (r.exact() && *r.width >= k)
    return Certificate{"exact width " + std::to_string(*r.width), *r.width};
  if (!r.exact() && r.lower >= k)
    return Certificate{"search lower bound " + std::to_string(r.lower), r.lower};
  return std::nullopt;
}

namespace {

ReductionStep ladder_step(Rule rule, const Ladder& L, int target, std::string note) {
  ReductionStep step;
  step.rule = rule;
  step.ladder = L;
  step.length_before = L.length();
  step.length_after = target;
  step.note = std::move(note);
  return step;
}

}  // namespace

std::pair<Graph, ReductionReport> reduce(const Graph& g, const ReductionPolicy& policy) {
  if (policy.general_target < 4)
    throw PolicyError("general_target " + std::to_string(policy.general_target) +
                      " is below the safe floor of 4");
  if (policy.aggressive_target < 3)
    throw PolicyError("aggressive_target " + std::to_string(policy.aggressive_target) +
                      " is below the safe floor of 3");

  Graph cur = g;
  ReductionReport report;
  report.vertices_before = g.num_vertices();

  bool progress = true;
  while (progress) {
    progress = false;
    // One rewrite per scan; every edit invalidates the other embeddings.
    for (const Ladder& L : find_ladders(cur)) {
      LadderClass cls = classify(cur, L);
      std::optional<ReductionStep> step;
      if (cls.disconnecting && L.length() > 1) {
        step = ladder_step(Rule::disconnecting, L, 1, "rail edges form an edge cut");
      } else if (!cls.degree2_cornerpoints.empty() && L.length() > 1) {
        Graph candidate = shorten(cur, L, 1).first;
        if (auto cert = certify_tw_at_least(candidate, 3)) {
          step = ladder_step(Rule::degree2_cornerpoint, L, 1,
                             "shortened graph keeps width >= 3: " + cert->method);
          report.tw_certificates.push_back(cert->method);
        }
      }
      if (!step && policy.allow_aggressive && L.length() > policy.aggressive_target) {
        Graph candidate = shorten(cur, L, policy.aggressive_target).first;
        if (auto cert = certify_tw_at_least(candidate, 4)) {
          step = ladder_step(Rule::aggressive, L, policy.aggressive_target,
                             "shortened graph keeps width >= 4: " + cert->method);
          report.tw_certificates.push_back(cert->method);
        } else {
          report.tw_certificates.push_back(
              "aggressive rule refused on a length-" + std::to_string(L.length()) +
              " ladder: no width >= 4 evidence for the shortened graph");
        }
      }
      if (!step && L.length() > policy.general_target)
        step = ladder_step(Rule::general, L, policy.general_target,
                           "safe at any width for lengths 4 and up");
      if (step) {
        cur = shorten(cur, L, step->length_after).first;
        report.steps.push_back(std::move(*step));
        progress = true;
        break;
      }
    }
    if (!progress && policy.suppress_degree2) {
      for (Vertex v : cur.vertices()) {
        if (!can_suppress_safely(cur, v)) continue;
        ReductionStep step;
        step.rule = Rule::suppress;
        step.suppressed = v;
        step.note = "degree-2 vertex, a cycle survives";
        cur = suppress_degree2(cur, v);
        report.steps.push_back(std::move(step));
        progress = true;
        break;
      }
    }
    if (progress && !policy.iterate_to_fixpoint) break;
  }

  report.vertices_after = cur.num_vertices();
  return {std::move(cur), std::move(report)};
}

Graph replay(const Graph& input, const ReductionReport& report) {
  Graph cur = input;
  for (const ReductionStep& step : report.steps) {
    if (step.rule == Rule::suppress)
      cur = suppress_degree2(cur, step.suppressed);
    else
      cur = shorten(cur, step.ladder, step.length_after).first;
  }
  return cur;
}

}  // namespace twkit
