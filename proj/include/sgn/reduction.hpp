#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgn/signed_graph.hpp"

namespace sgraph {

enum class StepKind { ComponentSplit, PendantDelete, CutPointDecrement, CutPointSplit, BaseCase };
enum class BaseMethod { None, RankOracle, ClosedForm };

std::string_view to_string(StepKind kind);
std::string_view to_string(BaseMethod method);

/// One structural rule application. Graphs are referred to by their index
/// in ReductionTrace::nodes; vertex fields use the labels of `before`.
struct ReductionStep {
  StepKind kind = StepKind::BaseCase;
  int before = 0;
  std::vector<int> after;
  Vertex vertex = -1;    // pendant vertex or cut-point
  Vertex neighbor = -1;  // neighbor of the pendant
  int component = -1;    // component of G - v that triggered a cut-point rule
  BaseMethod method = BaseMethod::None;
  std::string relation;
};

struct TraceNode {
  SignedGraph graph;
  int nullity = 0;
};

struct ReductionTrace {
  std::vector<TraceNode> nodes;  // nodes[0] is the input graph
  std::vector<ReductionStep> steps;
  int result_nullity = 0;
};

struct PendantDeletion {
  Vertex pendant = -1;
  Vertex neighbor = -1;
  SignedGraph reduced;
};

/// Deletes the lowest-labeled pendant vertex together with its neighbor;
/// nullity is unchanged. nullopt when g has no pendant vertex.
std::optional<PendantDeletion> apply_pendant(const SignedGraph& g);

/// Cut-point v with a component G1 of G - v where eta(G1) = eta(G1 + v) + 1,
/// so eta(G) = sum of eta over the components of G - v, minus 1.
struct CutPointDecrement {
  Vertex cut_point = -1;
  int component = -1;
  std::vector<Subgraph> parts;  // components of G - v, labels in G
};

/// Cut-point v with a component G1 of G - v where eta(G1) = eta(G1 + v) - 1,
/// so eta(G) = eta(G1) + eta(G - G1).
struct CutPointSplit {
  Vertex cut_point = -1;
  int component = -1;
  Subgraph part;  // G1
  Subgraph rest;  // G - G1
};

/// Both throw GraphError if g is disconnected or v is not a cut-point.
/// The hypotheses are decided with the rank oracle; the lowest-indexed
/// qualifying component is chosen.
std::optional<CutPointDecrement> try_cutpoint_case1(const SignedGraph& g, Vertex v);
std::optional<CutPointSplit> try_cutpoint_case2(const SignedGraph& g, Vertex v);

/// Nullity by structural recursion: component split, pendant deletion,
/// cut-point rules (lowest cut-point first, decrement before split), then a
/// base case (closed form for K1, paths and cycles, rank oracle otherwise).
ReductionTrace nullity_structural(const SignedGraph& g);

/// Re-checks every step's relation with the rank oracle. Returns a
/// description of the first violation, or nullopt when the trace is sound.
std::optional<std::string> check_trace(const ReductionTrace& trace);

/// {"result": eta, "nodes": [{"id", "nullity", "graph"}], "steps": [...]}
std::string trace_to_json(const ReductionTrace& trace);

}  // namespace sgraph
