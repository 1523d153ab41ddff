#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "oracles.hpp"
#include "sgn/corpus.hpp"
#include "sgn/exact_matrix.hpp"
#include "sgn/families.hpp"
#include "sgn/reduction.hpp"

using namespace sgraph;

namespace {

int count_steps(const ReductionTrace& t, StepKind kind) {
  int n = 0;
  for (const auto& s : t.steps) n += s.kind == kind ? 1 : 0;
  return n;
}

}  // namespace

TEST(ApplyPendant, Examples) {
  const auto p4 = apply_pendant(gen_path(4));
  ASSERT_TRUE(p4.has_value());
  EXPECT_EQ(p4->pendant, 0);
  EXPECT_EQ(p4->neighbor, 1);
  EXPECT_EQ(p4->reduced, gen_path(2));

  const auto s5 = apply_pendant(gen_star(5));
  ASSERT_TRUE(s5.has_value());
  EXPECT_EQ(s5->reduced, SignedGraph(3, {}));

  EXPECT_FALSE(apply_pendant(gen_cycle(5, 1)).has_value());
}

TEST(ApplyPendant, RepeatedDeletionOnG1LeavesP2C4AndIsolatedVertices) {
  const auto step = apply_pendant(gen_figure(FigureId::G1, 11));
  ASSERT_TRUE(step.has_value());
  const SignedGraph& g = step->reduced;
  std::vector<int> orders;
  int isolated = 0;
  for (const auto& part : components(g)) {
    if (part.graph.order() == 1) {
      ++isolated;
    } else {
      orders.push_back(part.graph.order());
    }
  }
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<int>{2, 4}));
  EXPECT_EQ(isolated, 11 - 8);
}

TEST(ApplyPendant, PreservesNullity) {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 400; ++t) {
    const auto g = random_signed_graph(rng, 2 + t % 11, 0.12);
    if (auto step = apply_pendant(g)) { EXPECT_EQ(oracle::nullity(step->reduced), oracle::nullity(g)); }
  }
}

TEST(CutPointCase1, PathCenter) {
  const auto result = try_cutpoint_case1(gen_path(3), 1);
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(result->parts.size(), 2u);
  int total = -1;
  for (const auto& part : result->parts) total += nullity_rank(part.graph);
  EXPECT_EQ(total, 1);
}

TEST(CutPointCase1, EvenCycleWithZeroNullity) {
  // Balanced C6 has nullity 0 and C6 - v = P5 has nullity 1.
  const auto g = gen_infinity(6, 3, 2, 0, 1);
  const auto result = try_cutpoint_case1(g, 0);
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(result->parts[result->component].graph.order(), 5);
  int total = -1;
  for (const auto& part : result->parts) total += nullity_rank(part.graph);
  EXPECT_EQ(total, oracle::nullity(g));
}

TEST(CutPointCase1, NotApplicableAtBalancedQuadrangleComponent) {
  // At the joining vertex, the quadrangle side is P3 with eta(P3) = 1 and
  // eta(C4) = 2, so only the second case can use it.
  const auto g = gen_infinity(4, 3, 1, 0, 1);
  const auto result = try_cutpoint_case1(g, 0);
  if (result) { EXPECT_NE(result->parts[result->component].graph.order(), 3); }
  const auto split = try_cutpoint_case2(g, 0);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(nullity_rank(split->part.graph) + nullity_rank(split->rest.graph), nullity_rank(g));
}

TEST(CutPointCase2, BalancedQuadrangle) {
  const auto g = gen_infinity(4, 5, 3, 0, 0);
  const auto split = try_cutpoint_case2(g, 0);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->part.graph.order(), 3);
  EXPECT_EQ(nullity_rank(split->part.graph), 1);
  EXPECT_EQ(nullity_rank(split->part.graph) + nullity_rank(split->rest.graph), nullity_rank(g));
}

TEST(CutPoint, RejectsNonCutPointsAndDisconnectedGraphs) {
  EXPECT_THROW(try_cutpoint_case1(gen_cycle(5, 0), 0), GraphError);
  EXPECT_THROW(try_cutpoint_case2(gen_path(4), 0), GraphError);
  EXPECT_THROW(try_cutpoint_case1(SignedGraph(3, {{0, 1, 1}}), 0), GraphError);
}

TEST(CutPoint, RelationsHoldOnRandomGraphs) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_signed_graph(rng, 3 + t % 10, 0.15);
    const int eta = oracle::nullity(g);
    for (Vertex v : cut_points(g)) {
      if (auto d = try_cutpoint_case1(g, v)) {
        int total = -1;
        for (const auto& part : d->parts) total += oracle::nullity(part.graph);
        EXPECT_EQ(total, eta);
      }
      if (auto s = try_cutpoint_case2(g, v)) {
        EXPECT_EQ(oracle::nullity(s->part.graph) + oracle::nullity(s->rest.graph), eta);
      }
    }
  }
}

TEST(NullityStructural, TreesReduceToIsolatedVertices) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_signed_graph(rng, 1 + t % 14, 0.0);
    const auto trace = nullity_structural(g);
    EXPECT_EQ(trace.result_nullity, oracle::nullity(g));
    for (const auto& step : trace.steps) {
      if (step.kind == StepKind::BaseCase) {
        EXPECT_EQ(step.method, BaseMethod::ClosedForm);
        EXPECT_LE(trace.nodes[step.before].graph.order(), 1);
      }
      EXPECT_NE(step.kind, StepKind::CutPointDecrement);
      EXPECT_NE(step.kind, StepKind::CutPointSplit);
    }
  }
}

TEST(NullityStructural, BalancedC8IsAClosedForm) {
  const auto trace = nullity_structural(gen_cycle(8, 2));
  EXPECT_EQ(trace.result_nullity, 2);
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(trace.steps[0].kind, StepKind::BaseCase);
  EXPECT_EQ(trace.steps[0].method, BaseMethod::ClosedForm);
}

TEST(NullityStructural, G2ReducesByPendants) {
  for (int n = 8; n <= 12; ++n) {
    for (int k = 1; k <= n - 7; ++k) {
      const auto trace = nullity_structural(gen_figure(FigureId::G2, n, k));
      EXPECT_EQ(trace.result_nullity, k);
      EXPECT_GT(count_steps(trace, StepKind::PendantDelete), 0);
      EXPECT_FALSE(check_trace(trace).has_value());
    }
  }
}

TEST(NullityStructural, MatchesRankAndTraceChecks) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 300; ++t) {
    const auto g = t % 3 == 0 ? oracle::random_graph(rng, 1 + t % 12, 0.25)
                              : random_signed_graph(rng, 1 + t % 14, 0.1);
    const auto trace = nullity_structural(g);
    EXPECT_EQ(trace.result_nullity, oracle::nullity(g));
    EXPECT_EQ(trace.nodes[0].graph, g);
    const auto problem = check_trace(trace);
    EXPECT_FALSE(problem.has_value()) << problem.value_or("");
  }
}

TEST(NullityStructural, UsesCutPointRules) {
  const auto trace = nullity_structural(gen_infinity(4, 5, 3, 0, 0));
  EXPECT_EQ(count_steps(trace, StepKind::CutPointDecrement) + count_steps(trace, StepKind::CutPointSplit), 1);
  EXPECT_EQ(trace.result_nullity, oracle::nullity(gen_infinity(4, 5, 3, 0, 0)));
}

TEST(CheckTrace, DetectsTampering) {
  const auto g = gen_infinity(4, 5, 3, 0, 0);
  const auto good = nullity_structural(g);
  ASSERT_FALSE(check_trace(good).has_value());

  auto wrong_result = good;
  wrong_result.result_nullity += 1;
  EXPECT_TRUE(check_trace(wrong_result).has_value());

  auto wrong_node = good;
  wrong_node.nodes.back().nullity += 1;
  EXPECT_TRUE(check_trace(wrong_node).has_value());

  auto wrong_child = good;
  wrong_child.nodes.back().graph = gen_cycle(4, 0);
  wrong_child.nodes.back().nullity = 2;
  EXPECT_TRUE(check_trace(wrong_child).has_value());

  EXPECT_TRUE(check_trace(ReductionTrace{}).has_value());
}

TEST(TraceJson, Shape) {
  const auto trace = nullity_structural(gen_path(4));
  const auto doc = nlohmann::json::parse(trace_to_json(trace));
  EXPECT_EQ(doc["result"], 0);
  ASSERT_EQ(doc["nodes"].size(), trace.nodes.size());
  EXPECT_EQ(doc["nodes"][0]["id"], 0);
  EXPECT_EQ(doc["steps"][0]["kind"], std::string(to_string(StepKind::PendantDelete)));
  EXPECT_EQ(trace_to_json(trace), trace_to_json(nullity_structural(gen_path(4))));
}
