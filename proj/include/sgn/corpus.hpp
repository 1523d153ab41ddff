#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sgn/families.hpp"
#include "sgn/signed_graph.hpp"

namespace sgraph {

/// Largest order for labeled enumeration of connected graphs.
inline constexpr int kLabeledLimit = 6;
/// Largest order for connected graphs up to isomorphism.
inline constexpr int kUnlabeledLimit = 7;
/// Largest order for bicyclic graphs up to isomorphism.
inline constexpr int kBicyclicLimit = 9;

/// Canonical code of the underlying graph: the lexicographically smallest
/// upper-triangle adjacency bitmask over all relabelings that list vertices
/// by non-decreasing degree. Equal codes iff isomorphic. n <= 11.
std::uint64_t canonical_code(const SignedGraph& g);

/// All-positive graph whose upper-triangle bitmask is `code`.
SignedGraph graph_from_code(int n, std::uint64_t code);

bool isomorphic(const SignedGraph& a, const SignedGraph& b);

/// Every connected simple graph on vertex set 0..n-1 (labeled), all
/// positive, in increasing edge-bitmask order. 1 <= n <= kLabeledLimit.
std::vector<SignedGraph> labeled_connected_graphs(int n);

/// Connected graphs up to isomorphism, canonical labeling, sorted by code.
/// 1 <= n <= kUnlabeledLimit.
std::vector<SignedGraph> unlabeled_connected_graphs(int n);

/// Connected bicyclic graphs up to isomorphism, sorted by code.
/// 4 <= n <= kBicyclicLimit.
std::vector<SignedGraph> unlabeled_bicyclic_graphs(int n);

/// One signature per switching class of the underlying graph: edges of the
/// smallest-label BFS forest positive, every sign pattern on the remaining
/// c = m - n + components edges. Pattern i negates the j-th non-tree edge
/// iff bit j of i is set. 2^c graphs; c <= 20.
std::vector<SignedGraph> switching_classes(const SignedGraph& underlying);

/// Identifies a corpus member for reports.
struct CorpusTag {
  int n = 0;
  bool labeled = true;
  std::size_t graph_index = 0;
  std::size_t class_index = 0;

  std::string key() const;
};

/// Every connected signed graph with at most n_max vertices, up to
/// switching: labeled underlying graphs for n <= kLabeledLimit, unlabeled
/// ones for n = kUnlabeledLimit. n_max <= kUnlabeledLimit.
void for_each_corpus_graph(int n_max, const std::function<void(const SignedGraph&, const CorpusTag&)>& visit);

/// Connected graph with a uniform random spanning tree shape (random
/// attachment), each other pair joined with probability `density`, and
/// independent random signs.
SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double density);

SwitchingFunction random_switching(std::mt19937_64& rng, int n);

/// Skeleton of the class (an infinity graph with l >= 2, with l = 1, or a
/// theta graph) on a random number of vertices, grown to n vertices by
/// attaching random leaves one at a time, with random signs.
SignedGraph random_bicyclic(std::mt19937_64& rng, BicyclicClass c, int n);

}  // namespace sgraph
