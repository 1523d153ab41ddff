#include "sgn/reduction.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <json.hpp>

#include "sgn/closed_forms.hpp"
#include "sgn/exact_matrix.hpp"

namespace sgraph {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::ComponentSplit: return "ComponentSplit";
    case StepKind::PendantDelete: return "PendantDelete";
    case StepKind::CutPointDecrement: return "CutPointDecrement";
    case StepKind::CutPointSplit: return "CutPointSplit";
    case StepKind::BaseCase: return "BaseCase";
  }
  return "?";
}

std::string_view to_string(BaseMethod method) {
  switch (method) {
    case BaseMethod::None: return "None";
    case BaseMethod::RankOracle: return "RankOracle";
    case BaseMethod::ClosedForm: return "ClosedForm";
  }
  return "?";
}

std::optional<PendantDeletion> apply_pendant(const SignedGraph& g) {
  auto pendants = pendant_pairs(g);
  if (pendants.empty()) return std::nullopt;
  const auto [leaf, neighbor] = pendants.front();
  const std::array<Vertex, 2> removed{leaf, neighbor};
  return PendantDeletion{leaf, neighbor, delete_vertices(g, removed).graph};
}

namespace {

struct CutPointPieces {
  std::vector<Subgraph> parts;       // components of G - v, labels in G
  std::vector<int> part_nullity;     // eta(G_i)
  std::vector<int> extended_nullity; // eta(G_i + v)
};

CutPointPieces split_at(const SignedGraph& g, Vertex v) {
  if (!g.is_connected()) throw GraphError("cut-point rules need a connected graph");
  if (!g.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  const std::array<Vertex, 1> removed{v};
  Subgraph rest = delete_vertices(g, removed);
  auto pieces = components(rest.graph);
  if (pieces.size() < 2) throw GraphError("vertex " + std::to_string(v) + " is not a cut-point");

  CutPointPieces out;
  for (auto& piece : pieces) {
    for (auto& x : piece.origin) x = rest.origin[x];
    std::vector<Vertex> with_v = piece.origin;
    with_v.insert(std::upper_bound(with_v.begin(), with_v.end(), v), v);
    out.part_nullity.push_back(nullity_rank(piece.graph));
    out.extended_nullity.push_back(nullity_rank(induced_subgraph(g, with_v).graph));
    out.parts.push_back(std::move(piece));
  }
  return out;
}

}  // namespace

std::optional<CutPointDecrement> try_cutpoint_case1(const SignedGraph& g, Vertex v) {
  auto pieces = split_at(g, v);
  for (std::size_t i = 0; i < pieces.parts.size(); ++i) {
    if (pieces.part_nullity[i] == pieces.extended_nullity[i] + 1) {
      return CutPointDecrement{v, static_cast<int>(i), std::move(pieces.parts)};
    }
  }
  return std::nullopt;
}

std::optional<CutPointSplit> try_cutpoint_case2(const SignedGraph& g, Vertex v) {
  auto pieces = split_at(g, v);
  for (std::size_t i = 0; i < pieces.parts.size(); ++i) {
    if (pieces.part_nullity[i] == pieces.extended_nullity[i] - 1) {
      Subgraph part = std::move(pieces.parts[i]);
      Subgraph rest = delete_vertices(g, part.origin);
      return CutPointSplit{v, static_cast<int>(i), std::move(part), std::move(rest)};
    }
  }
  return std::nullopt;
}

namespace {

std::string eta(int id) { return "eta(#" + std::to_string(id) + ")"; }

std::string sum_of(const std::vector<int>& ids) {
  std::string text;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) text += " + ";
    text += eta(ids[i]);
  }
  return text.empty() ? "0" : text;
}

bool is_cycle(const SignedGraph& g) {
  if (g.order() < 3 || g.size() != g.order() || !g.is_connected()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

class TraceBuilder {
 public:
  ReductionTrace finish(const SignedGraph& g) {
    const int root = add(g);
    trace_.result_nullity = solve(root);
    return std::move(trace_);
  }

 private:
  int add(SignedGraph g) {
    trace_.nodes.push_back({std::move(g), 0});
    return static_cast<int>(trace_.nodes.size()) - 1;
  }

  int record(ReductionStep step, int nullity) {
    trace_.nodes[step.before].nullity = nullity;
    trace_.steps.push_back(std::move(step));
    return nullity;
  }

  int solve(int id) {
    // Copy: adding nodes may reallocate the node vector.
    const SignedGraph g = trace_.nodes[id].graph;
    ReductionStep step;
    step.before = id;

    if (g.order() == 0) {
      step.method = BaseMethod::ClosedForm;
      step.relation = eta(id) + " = 0 (empty graph)";
      return record(std::move(step), 0);
    }

    if (!g.is_connected()) {
      step.kind = StepKind::ComponentSplit;
      for (auto& part : components(g)) step.after.push_back(add(std::move(part.graph)));
      step.relation = eta(id) + " = " + sum_of(step.after);
      trace_.steps.push_back(step);
      int total = 0;
      for (int child : step.after) total += solve(child);
      return trace_.nodes[id].nullity = total;
    }

    if (auto pendant = apply_pendant(g)) {
      step.kind = StepKind::PendantDelete;
      step.vertex = pendant->pendant;
      step.neighbor = pendant->neighbor;
      step.after = {add(std::move(pendant->reduced))};
      step.relation = eta(id) + " = " + eta(step.after[0]);
      trace_.steps.push_back(step);
      return trace_.nodes[id].nullity = solve(step.after[0]);
    }

    if (g.order() == 1) {
      step.method = BaseMethod::ClosedForm;
      step.relation = eta(id) + " = 1 (K1)";
      return record(std::move(step), nullity_path(1));
    }

    if (is_cycle(g)) {
      int negatives = 0;
      for (const auto& e : g.edges()) negatives += e.sign < 0 ? 1 : 0;
      const int value = nullity_cycle(g.order(), negatives % 2);
      step.method = BaseMethod::ClosedForm;
      step.relation = eta(id) + " = " + std::to_string(value) + " (cycle C" + std::to_string(g.order()) +
                      ", negative parity " + std::to_string(negatives % 2) + ")";
      return record(std::move(step), value);
    }

    for (Vertex v : cut_points(g)) {
      if (auto split = try_cutpoint_case1(g, v)) {
        step.kind = StepKind::CutPointDecrement;
        step.vertex = v;
        step.component = split->component;
        for (auto& part : split->parts) step.after.push_back(add(std::move(part.graph)));
        step.relation = eta(id) + " = " + sum_of(step.after) + " - 1";
        trace_.steps.push_back(step);
        int total = -1;
        for (int child : step.after) total += solve(child);
        return trace_.nodes[id].nullity = total;
      }
      if (auto split = try_cutpoint_case2(g, v)) {
        step.kind = StepKind::CutPointSplit;
        step.vertex = v;
        step.component = split->component;
        step.after = {add(std::move(split->part.graph)), add(std::move(split->rest.graph))};
        step.relation = eta(id) + " = " + sum_of(step.after);
        trace_.steps.push_back(step);
        const int total = solve(step.after[0]) + solve(step.after[1]);
        return trace_.nodes[id].nullity = total;
      }
    }

    step.method = BaseMethod::RankOracle;
    const int value = nullity_rank(g);
    step.relation = eta(id) + " = " + std::to_string(value) + " (rank oracle)";
    return record(std::move(step), value);
  }

  ReductionTrace trace_;
};

}  // namespace

ReductionTrace nullity_structural(const SignedGraph& g) { return TraceBuilder{}.finish(g); }

std::optional<std::string> check_trace(const ReductionTrace& trace) {
  if (trace.nodes.empty()) return "trace has no nodes";
  std::vector<int> eta_of(trace.nodes.size());
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    eta_of[i] = nullity_rank(trace.nodes[i].graph);
    if (eta_of[i] != trace.nodes[i].nullity) {
      return "node #" + std::to_string(i) + " records nullity " + std::to_string(trace.nodes[i].nullity) +
             ", rank oracle gives " + std::to_string(eta_of[i]);
    }
  }
  if (trace.result_nullity != eta_of[0]) return "result differs from the root nullity";

  for (const auto& step : trace.steps) {
    const SignedGraph& before = trace.nodes[static_cast<std::size_t>(step.before)].graph;
    int after_sum = 0;
    for (int child : step.after) after_sum += eta_of[static_cast<std::size_t>(child)];
    const int lhs = eta_of[static_cast<std::size_t>(step.before)];
    const std::string where = std::string(to_string(step.kind)) + " at #" + std::to_string(step.before);

    auto children_are = [&](const std::vector<SignedGraph>& expected) {
      if (expected.size() != step.after.size()) return false;
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!(trace.nodes[static_cast<std::size_t>(step.after[i])].graph == expected[i])) return false;
      }
      return true;
    };
    auto graphs_of = [](std::vector<Subgraph> parts) {
      std::vector<SignedGraph> out;
      for (auto& part : parts) out.push_back(std::move(part.graph));
      return out;
    };

    switch (step.kind) {
      case StepKind::ComponentSplit:
        if (!children_are(graphs_of(components(before)))) return where + ": children are not the components";
        if (lhs != after_sum) return where + ": relation " + step.relation + " fails";
        break;
      case StepKind::CutPointDecrement: {
        const std::array<Vertex, 1> removed{step.vertex};
        if (!children_are(graphs_of(components(delete_vertices(before, removed).graph)))) {
          return where + ": children are not the components of G - v";
        }
        if (lhs != after_sum - 1) return where + ": relation " + step.relation + " fails";
        break;
      }
      case StepKind::CutPointSplit: {
        const std::array<Vertex, 1> removed{step.vertex};
        const Subgraph rest = delete_vertices(before, removed);
        auto parts = components(rest.graph);
        if (step.component < 0 || static_cast<std::size_t>(step.component) >= parts.size()) {
          return where + ": component index out of range";
        }
        std::vector<Vertex> part_vertices;
        for (Vertex x : parts[static_cast<std::size_t>(step.component)].origin) part_vertices.push_back(rest.origin[x]);
        if (!children_are({parts[static_cast<std::size_t>(step.component)].graph,
                           delete_vertices(before, part_vertices).graph})) {
          return where + ": children are not G1 and G - G1";
        }
        if (lhs != after_sum) return where + ": relation " + step.relation + " fails";
        break;
      }
      case StepKind::PendantDelete: {
        if (before.degree(step.vertex) != 1 || !before.adjacent(step.vertex, step.neighbor)) {
          return where + ": vertex " + std::to_string(step.vertex) + " is not a pendant of " +
                 std::to_string(step.neighbor);
        }
        const std::array<Vertex, 2> removed{step.vertex, step.neighbor};
        if (step.after.size() != 1 ||
            !(trace.nodes[static_cast<std::size_t>(step.after[0])].graph == delete_vertices(before, removed).graph)) {
          return where + ": reduced graph does not match";
        }
        if (lhs != after_sum) return where + ": relation " + step.relation + " fails";
        break;
      }
      case StepKind::BaseCase:
        if (!step.after.empty()) return where + ": base case with children";
        break;
    }
  }
  return std::nullopt;
}

std::string trace_to_json(const ReductionTrace& trace) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    const auto& g = trace.nodes[i].graph;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.sign});
    nodes.push_back({{"id", i}, {"nullity", trace.nodes[i].nullity}, {"graph", {{"n", g.order()}, {"edges", edges}}}});
  }
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    nlohmann::json item{{"kind", to_string(step.kind)}, {"before", step.before}, {"after", step.after},
                        {"relation", step.relation}};
    if (step.vertex >= 0) item["vertex"] = step.vertex;
    if (step.neighbor >= 0) item["neighbor"] = step.neighbor;
    if (step.component >= 0) item["component"] = step.component;
    if (step.kind == StepKind::BaseCase) item["method"] = to_string(step.method);
    steps.push_back(std::move(item));
  }
  return nlohmann::json{{"result", trace.result_nullity}, {"nodes", nodes}, {"steps", steps}}.dump(2);
}

}  // namespace sgraph
