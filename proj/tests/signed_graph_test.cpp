#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"
#include "sgn/corpus.hpp"
#include "sgn/families.hpp"
#include "sgn/signed_graph.hpp"

using namespace sgraph;

namespace {

SignedGraph triangle(int s01, int s12, int s02) { return SignedGraph(3, {{0, 1, s01}, {1, 2, s12}, {0, 2, s02}}); }

ParseErrorKind parse_kind(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseErrorKind::MalformedHeader;
}

}  // namespace

TEST(SignedGraph, RejectsInvalidEdges) {
  EXPECT_THROW(SignedGraph(2, {{0, 0, 1}}), GraphError);
  EXPECT_THROW(SignedGraph(2, {{0, 2, 1}}), GraphError);
  EXPECT_THROW(SignedGraph(2, {{0, 1, 2}}), GraphError);
  EXPECT_THROW(SignedGraph(2, {{0, 1, 1}, {1, 0, -1}}), GraphError);
  EXPECT_THROW(SignedGraph(-1, {}), GraphError);
}

TEST(SignedGraph, NormalizesAndSortsEdges) {
  SignedGraph g(3, {{2, 1, -1}, {1, 0, 1}});
  ASSERT_EQ(g.size(), 2);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2, -1}));
  EXPECT_EQ(g.sign(2, 1), -1);
  EXPECT_EQ(g.sign(0, 2), 0);
  EXPECT_EQ(g.degree(1), 2);
}

TEST(ParseEdgeList, Examples) {
  const auto t = parse_edge_list("3 3\n0 1 1\n1 2 1\n0 2 -1");
  EXPECT_EQ(t, triangle(1, 1, -1));
  const auto k1 = parse_edge_list("1 0");
  EXPECT_EQ(k1.order(), 1);
  EXPECT_EQ(k1.size(), 0);
  const auto c4 = parse_edge_list("4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1");
  EXPECT_TRUE(c4.is_all_positive());
  EXPECT_EQ(c4.size(), 4);
}

TEST(ParseEdgeList, CommentsBlankLinesAndReversedPairs) {
  const auto g = parse_edge_list("# triangle\n\n3 2\n# edges\n1 0 -1\n\n2 1 1\n");
  EXPECT_EQ(g, SignedGraph(3, {{0, 1, -1}, {1, 2, 1}}));
}

TEST(ParseEdgeList, DistinctErrorKinds) {
  EXPECT_EQ(parse_kind("x 1\n0 1 1"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(parse_kind("2 1\n0 1"), ParseErrorKind::MalformedLine);
  EXPECT_EQ(parse_kind("2 1\n0 5 1"), ParseErrorKind::VertexOutOfRange);
  EXPECT_EQ(parse_kind("2 1\n0 1 2"), ParseErrorKind::BadSign);
  EXPECT_EQ(parse_kind("3 2\n0 1 1\n1 0 1"), ParseErrorKind::DuplicateEdge);
  EXPECT_EQ(parse_kind("2 1\n1 1 1"), ParseErrorKind::Loop);
  EXPECT_EQ(parse_kind("3 2\n0 1 1"), ParseErrorKind::EdgeCountMismatch);
}

TEST(ParseEdgeList, ErrorNamesOffendingLine) {
  try {
    parse_edge_list("3 2\n0 1 1\n\n1 2 7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(Serialization, RoundTripsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_graph(rng, 1 + i % 9, 0.4);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
    EXPECT_EQ(graph_from_json(to_json(g)), g);
  }
  EXPECT_EQ(to_json(triangle(-1, 1, 1)), R"({"edges":[[0,1,-1],[0,2,1],[1,2,1]],"n":3})");
}

TEST(Components, Examples) {
  const SignedGraph c3k1(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
  const auto parts = components(c3k1);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].graph.order(), 3);
  EXPECT_EQ(parts[1].graph.order(), 1);
  EXPECT_EQ(parts[1].origin, std::vector<Vertex>{3});

  const auto c5 = gen_cycle(5, 1);
  const auto one = components(c5);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].graph, c5);

  const SignedGraph two_edges(4, {{0, 2, -1}, {1, 3, 1}});
  const auto pieces = components(two_edges);
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].graph, SignedGraph(2, {{0, 1, -1}}));
  EXPECT_EQ(pieces[1].origin, (std::vector<Vertex>{1, 3}));
}

TEST(Components, AgreeWithRelaxationOracleAndKeepSigns) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto g = oracle::random_graph(rng, 1 + i % 10, 0.2);
    const auto parts = components(g);
    EXPECT_EQ(static_cast<int>(parts.size()), oracle::component_count(g.order(), g.edges()));
    int covered = 0;
    for (const auto& part : parts) {
      covered += part.graph.order();
      EXPECT_TRUE(part.graph.is_connected());
      for (const auto& e : part.graph.edges()) EXPECT_EQ(g.sign(part.origin[e.u], part.origin[e.v]), e.sign);
    }
    EXPECT_EQ(covered, g.order());
  }
}

TEST(CutPoints, Examples) {
  EXPECT_EQ(cut_points(gen_path(5)), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(cut_points(gen_cycle(4, 0)).empty());
  EXPECT_EQ(cut_points(gen_infinity(3, 3, 1, 1, 1)), std::vector<Vertex>{0});
  EXPECT_THROW(cut_points(SignedGraph(2, {})), GraphError);
}

TEST(CutPoints, MatchDeletionOracle) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_signed_graph(rng, 2 + i % 10, 0.15);
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::array<Vertex, 1> removed{v};
      if (!delete_vertices(g, removed).graph.is_connected()) expected.push_back(v);
    }
    EXPECT_EQ(cut_points(g), expected);
  }
}

TEST(DeleteVertices, Examples) {
  const std::array<Vertex, 1> one{2};
  const auto p3 = delete_vertices(gen_cycle(4, 0), one);
  EXPECT_EQ(p3.graph.size(), 2);
  EXPECT_EQ(cut_points(p3.graph).size(), 1u);
  EXPECT_EQ(p3.origin, (std::vector<Vertex>{0, 1, 3}));

  const auto g = gen_cycle(5, 2);
  const auto same = delete_vertices(g, std::span<const Vertex>{});
  EXPECT_EQ(same.graph, g);
  EXPECT_EQ(same.origin, (std::vector<Vertex>{0, 1, 2, 3, 4}));

  const std::array<Vertex, 1> shared{0};
  const auto split = delete_vertices(gen_infinity(3, 3, 1, 1, 1), shared);
  const auto parts = components(split.graph);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].graph.order(), 2);
  EXPECT_EQ(parts[1].graph.order(), 2);

  const std::array<Vertex, 1> bad{9};
  EXPECT_THROW(delete_vertices(g, bad), GraphError);
}

TEST(PendantPairs, Examples) {
  EXPECT_EQ(pendant_pairs(gen_path(3)), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 1}}));
  EXPECT_TRUE(pendant_pairs(gen_cycle(5, 0)).empty());
  const auto star = pendant_pairs(gen_star(4));
  ASSERT_EQ(star.size(), 3u);
  for (const auto& [leaf, center] : star) EXPECT_EQ(center, 0);
}

TEST(Switching, Examples) {
  const auto g = gen_cycle(5, 2);
  EXPECT_EQ(apply_switching(g, SwitchingFunction::identity(5)), g);
  const SignedGraph edge(2, {{0, 1, -1}});
  EXPECT_EQ(apply_switching(edge, SwitchingFunction({-1, 1})), SignedGraph(2, {{0, 1, 1}}));
  const auto t = triangle(-1, 1, 1);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    SwitchingFunction theta({mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1});
    EXPECT_FALSE(is_balanced(apply_switching(t, theta)).balanced);
  }
  EXPECT_THROW(apply_switching(g, SwitchingFunction::identity(4)), GraphError);
  EXPECT_THROW(SwitchingFunction({1, 0}), GraphError);
}

TEST(Switching, PreservesEveryCycleSign) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_signed_graph(rng, 3 + i % 8, 0.3);
    const auto h = apply_switching(g, random_switching(rng, g.order()));
    EXPECT_TRUE(h.same_underlying(g));
    const auto before = find_cycles(g, 64);
    const auto after = find_cycles(h, 64);
    ASSERT_EQ(before.size(), after.size());
    for (std::size_t k = 0; k < before.size(); ++k) {
      EXPECT_EQ(before[k].vertices, after[k].vertices);
      EXPECT_EQ(before[k].sign, after[k].sign);
    }
  }
}

TEST(Balance, Examples) {
  const auto c4 = gen_cycle(4, 0);
  const auto b = is_balanced(c4);
  ASSERT_TRUE(b.balanced);
  EXPECT_TRUE(apply_switching(c4, *b.switching).is_all_positive());

  const auto u = is_balanced(triangle(1, -1, 1));
  ASSERT_FALSE(u.balanced);
  EXPECT_EQ(u.negative_cycle->vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(u.negative_cycle->sign, -1);

  const auto two = is_balanced(gen_cycle(4, 2));
  ASSERT_TRUE(two.balanced);
  EXPECT_TRUE(apply_switching(gen_cycle(4, 2), *two.switching).is_all_positive());
}

TEST(Balance, AgreesWithExhaustiveSwitchingSearch) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    const auto g = oracle::random_graph(rng, 1 + i % 9, 0.35);
    const auto result = is_balanced(g);
    EXPECT_EQ(result.balanced, oracle::balanced_by_search(g));
    if (result.balanced) {
      EXPECT_TRUE(apply_switching(g, *result.switching).is_all_positive());
    } else {
      const auto& c = *result.negative_cycle;
      EXPECT_EQ(c.sign, -1);
      EXPECT_EQ(c.negative_edges % 2, 1);
      for (int k = 0; k < c.length(); ++k) {
        EXPECT_TRUE(g.adjacent(c.vertices[k], c.vertices[(k + 1) % c.length()]));
      }
    }
  }
}

TEST(Balance, IffEveryCycleIsPositiveOnSmallCorpus) {
  for_each_corpus_graph(6, [](const SignedGraph& g, const CorpusTag&) {
    if (g.cyclomatic_number() > 2) return;
    bool all_positive = true;
    for (const auto& c : find_cycles(g)) all_positive = all_positive && c.sign == 1;
    EXPECT_EQ(is_balanced(g).balanced, all_positive);
  });
}

TEST(CanonicalSignature, Examples) {
  const auto c4 = gen_cycle(4, 2);
  EXPECT_TRUE(canonical_signature(c4).is_all_positive());
  const auto pos = gen_cycle(5, 0);
  EXPECT_EQ(canonical_signature(pos), pos);
  EXPECT_EQ(canonical_signature(triangle(-1, 1, 1)), canonical_signature(triangle(1, 1, -1)));
  EXPECT_TRUE(oracle::equivalent_by_search(triangle(-1, 1, 1), triangle(1, 1, -1)));
}

TEST(CanonicalSignature, IdempotentInvariantAndDecidesEquivalence) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto g = oracle::random_graph(rng, 1 + i % 8, 0.4);
    const auto c = canonical_signature(g);
    EXPECT_EQ(canonical_signature(c), c);
    EXPECT_TRUE(oracle::equivalent_by_search(g, c));
    EXPECT_EQ(canonical_signature(apply_switching(g, random_switching(rng, g.order()))), c);

    std::vector<Edge> flipped(g.edges().begin(), g.edges().end());
    if (!flipped.empty()) flipped[rng() % flipped.size()].sign *= -1;
    const SignedGraph h(g.order(), flipped);
    EXPECT_EQ(switching_equivalent(g, h), oracle::equivalent_by_search(g, h));
  }
}

TEST(FindCycles, Examples) {
  const auto inf = find_cycles(gen_infinity(3, 4, 2, 1, 0));
  ASSERT_EQ(inf.size(), 2u);
  std::vector<int> lengths{inf[0].length(), inf[1].length()};
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<int>{3, 4}));

  const auto theta = find_cycles(gen_theta(2, 2, 1, 0, 0, 0));
  ASSERT_EQ(theta.size(), 3u);
  int triangles = 0;
  for (const auto& c : theta) triangles += c.length() == 3 ? 1 : 0;
  EXPECT_EQ(triangles, 2);

  EXPECT_TRUE(find_cycles(gen_star(6)).empty());
  EXPECT_THROW(find_cycles(SignedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}})),
               GraphError);
}

TEST(FindCycles, CanonicalOrientationAndCompleteGraphCount) {
  std::vector<Edge> k5;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.push_back({u, v, 1});
  }
  // K5: 10 triangles, 15 quadrangles, 12 pentagons.
  const auto cycles = find_cycles(SignedGraph(5, k5), 6);
  EXPECT_EQ(cycles.size(), 37u);
  for (const auto& c : cycles) {
    EXPECT_EQ(c.vertices[0], *std::min_element(c.vertices.begin(), c.vertices.end()));
    EXPECT_LT(c.vertices[1], c.vertices.back());
  }
}
