#pragma once

#include <optional>
#include <string_view>

#include "sgn/signed_graph.hpp"

namespace sgraph {

/// Nullity of a signed path on n >= 1 vertices: n mod 2.
int nullity_path(int n);

/// Nullity of a signed cycle on n >= 3 vertices whose number of negative
/// edges has parity `negative_parity`: 2 when n = 0 (mod 4) with an even
/// count or n = 2 (mod 4) with an odd count, else 0.
int nullity_cycle(int n, int negative_parity);

/// Two cycles C_p and C_q joined by a path with l vertices (l = 1: the
/// cycles share a vertex); sp, sq are the negative-edge parities of the
/// cycles.
struct InfinitySpec {
  int p = 3;
  int q = 3;
  int l = 1;
  int sp = 0;
  int sq = 0;

  /// Throws std::invalid_argument unless p, q >= 3, l >= 1, sp, sq in {0, 1}.
  void validate() const;
};

/// Either an exact value or a lower bound. For the bound case `resolved`
/// carries the value computed on a concrete realization, if requested.
struct NullityResult {
  std::optional<int> exact;
  std::optional<int> lower_bound;
  std::optional<int> resolved;

  bool is_exact() const noexcept { return exact.has_value(); }
};

/// Nullity of the signed infinity graph. When p and q are odd, l >= 3 is odd
/// and sp - sq + (q - p)/2 is odd, only eta >= 1 is known; that case returns
/// lower_bound = 1 and, with `resolve`, the rank-oracle value on
/// gen_infinity(p, q, l, sp, sq).
NullityResult nullity_infinity(const InfinitySpec& spec, bool resolve = true);

enum class BoundClass { BPlus, BPlusPlus, ThetaUnbalanced, BicyclicUnbalanced };

std::string_view to_string(BoundClass c);
std::optional<BoundClass> parse_bound_class(std::string_view name);

/// Smallest n for which the class bound is stated: 7, 8, 5 and 4.
int upper_bound_threshold(BoundClass c);

/// n - 6, n - 6, n - 4 and n - 3 respectively. Throws std::invalid_argument
/// below the threshold.
int upper_bound(BoundClass c, int n);

/// True iff g is Theta(2,2,1) (K4 minus an edge) with both triangles
/// negative, the unique unbalanced bicyclic graph with nullity n - 3.
/// Throws std::invalid_argument unless g is connected, bicyclic and unbalanced.
bool is_max_nullity_extremal(const SignedGraph& g);

}  // namespace sgraph
