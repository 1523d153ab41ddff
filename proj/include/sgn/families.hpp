#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sgn/closed_forms.hpp"
#include "sgn/signed_graph.hpp"

namespace sgraph {

/// Parameters outside a family's domain.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructor produced a graph whose oracle nullity disagrees with the
/// value it was built for.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Path 0 - 1 - ... - (n-1), all positive. n >= 1.
SignedGraph gen_path(int n);

/// Cycle 0 - 1 - ... - (n-1) - 0 whose first s edges (0,1), (1,2), ... are
/// negative. n >= 3, 0 <= s <= n.
SignedGraph gen_cycle(int n, int s);

/// Star with k vertices in total, center 0. k >= 1.
SignedGraph gen_star(int k);

/// C_p on 0..p-1, a path of l vertices from vertex 0, and C_q hanging off the
/// end of the path; p + q + l - 2 vertices. The first sp edges of C_p and
/// the first sq edges of C_q (starting at the attachment vertex) are negative.
SignedGraph gen_infinity(int p, int q, int l, int sp, int sq);

/// Hubs 0 and 1 joined by internally disjoint paths of edge lengths p, q
/// and l, in that order; p + q + l - 1 vertices. A path whose parity is 1
/// has its first edge (at hub 0) negative. At most one length may be 1.
SignedGraph gen_theta(int p, int q, int l, int sp, int sq, int sl);

enum class FigureId { H1, H2, H3, H4, H5, H6, H7, H8, H9, H10, H11, H12, H13, G1, G2, G3, G4, G5, G6, G7, G8 };

std::string_view to_string(FigureId id);
std::optional<FigureId> parse_figure_id(std::string_view name);

/// Negative-edge parities of the two distinguished cycles of a figure.
/// The first cycle is the triangle for mixed triangle/quadrangle figures,
/// the pendant-free quadrangle of H10 (first quadrangle of H11, H12), and
/// the triangle abc of the Theta(2,2,1) figures. Single-cycle figures use
/// only the first entry.
using FigureParities = std::array<int, 2>;

/// Sign conditions the constructions are stated with: every triangle
/// unbalanced except the second triangle of G5/G6; quadrangles of G1 and G8
/// balanced.
FigureParities default_parities(FigureId id);

/// Fixed-size H graphs (all but H3) ignore n and k. H3 is C_(n-1) with a
/// pendant. Parametric figures check n and k as listed in the source.
SignedGraph gen_figure(FigureId id, int n = 0, int k = 0, std::optional<FigureParities> parities = std::nullopt);

enum class BicyclicClass { BPlus, BPlusPlus, Theta };

std::string_view to_string(BicyclicClass c);
std::optional<BicyclicClass> parse_bicyclic_class(std::string_view name);

/// Class of a connected bicyclic graph: two disjoint cycles (BPlus), two
/// cycles sharing one vertex (BPlusPlus) or three cycles (Theta). nullopt
/// when g is not connected or not bicyclic.
std::optional<BicyclicClass> classify_bicyclic(const SignedGraph& g);

/// Legal n and k: n >= 7, 8, 6 and 0 <= k <= n - 6, n - 6, n - 4.
bool realizer_in_range(BicyclicClass c, int n, int k);

/// An unbalanced graph of class c on n vertices with nullity k. The output
/// is re-checked with the rank oracle; a mismatch throws ConsistencyError.
/// Throws FamilyError outside realizer_in_range.
SignedGraph realize_nullity(BicyclicClass c, int n, int k);

struct PathSpec {
  int n = 1;
};
struct CycleSpec {
  int n = 3;
  int s = 0;
};
struct StarSpec {
  int k = 1;
};
struct ThetaSpec {
  int p = 2;
  int q = 2;
  int l = 1;
  int sp = 0;
  int sq = 0;
  int sl = 0;
};
struct FigureSpec {
  FigureId id = FigureId::H1;
  int n = 0;
  int k = 0;
  std::optional<FigureParities> parities;
};
struct RealizerSpec {
  BicyclicClass cls = BicyclicClass::BPlus;
  int n = 7;
  int k = 0;
};

using FamilySpec = std::variant<PathSpec, CycleSpec, StarSpec, InfinitySpec, ThetaSpec, FigureSpec, RealizerSpec>;

/// "[family:]kind:key=value,..." with kinds path (n), cycle (n, s), star (k),
/// infinity (p, q, l, sp, sq), theta (p, q, l, sp, sq, sl), figure (id, n, k,
/// s1, s2) and realize (class, n, k). Throws FamilyError on malformed text.
FamilySpec parse_family_spec(std::string_view text);

std::string to_string(const FamilySpec& spec);

SignedGraph generate(const FamilySpec& spec);

}  // namespace sgraph
