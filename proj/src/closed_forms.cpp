#include "sgn/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "sgn/exact_matrix.hpp"
#include "sgn/families.hpp"

namespace sgraph {

int nullity_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  return n % 2;
}

int nullity_cycle(int n, int negative_parity) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (negative_parity != 0 && negative_parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  if (n % 4 == 0 && negative_parity == 0) return 2;
  if (n % 4 == 2 && negative_parity == 1) return 2;
  return 0;
}

void InfinitySpec::validate() const {
  if (p < 3 || q < 3) throw std::invalid_argument("infinity graph cycles need length >= 3");
  if (l < 1) throw std::invalid_argument("infinity graph path needs l >= 1");
  if ((sp != 0 && sp != 1) || (sq != 0 && sq != 1)) throw std::invalid_argument("cycle parities must be 0 or 1");
}

NullityResult nullity_infinity(const InfinitySpec& spec, bool resolve) {
  spec.validate();
  NullityResult result;
  const bool p_odd = spec.p % 2 == 1;
  const bool q_odd = spec.q % 2 == 1;
  const bool l_odd = spec.l % 2 == 1;

  if (p_odd && q_odd) {
    if (!l_odd) {
      result.exact = 0;
      return result;
    }
    const int twist = spec.sp - spec.sq + (spec.q - spec.p) / 2;
    if (twist % 2 == 0) {
      result.exact = 0;
    } else if (spec.l == 1) {
      result.exact = 1;
    } else {
      result.lower_bound = 1;
      if (resolve) result.resolved = nullity_rank(gen_infinity(spec.p, spec.q, spec.l, spec.sp, spec.sq));
    }
    return result;
  }

  if (p_odd != q_odd) {
    const auto [even_len, even_parity] = p_odd ? std::pair{spec.q, spec.sq} : std::pair{spec.p, spec.sp};
    result.exact = nullity_cycle(even_len, even_parity) == 2 ? 1 : 0;
    return result;
  }

  const int eta_p = nullity_cycle(spec.p, spec.sp);
  const int eta_q = nullity_cycle(spec.q, spec.sq);
  if (l_odd) {
    result.exact = (eta_p == 2 && eta_q == 2) ? 3 : 1;
  } else {
    result.exact = (eta_p == 2 || eta_q == 2) ? 2 : 0;
  }
  return result;
}

std::string_view to_string(BoundClass c) {
  switch (c) {
    case BoundClass::BPlus: return "BPlus";
    case BoundClass::BPlusPlus: return "BPlusPlus";
    case BoundClass::ThetaUnbalanced: return "ThetaUnbalanced";
    case BoundClass::BicyclicUnbalanced: return "BicyclicUnbalanced";
  }
  return "?";
}

std::optional<BoundClass> parse_bound_class(std::string_view name) {
  for (auto c : {BoundClass::BPlus, BoundClass::BPlusPlus, BoundClass::ThetaUnbalanced,
                 BoundClass::BicyclicUnbalanced}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

int upper_bound_threshold(BoundClass c) {
  switch (c) {
    case BoundClass::BPlus: return 7;
    case BoundClass::BPlusPlus: return 8;
    case BoundClass::ThetaUnbalanced: return 5;
    case BoundClass::BicyclicUnbalanced: return 4;
  }
  return 0;
}

int upper_bound(BoundClass c, int n) {
  if (n < upper_bound_threshold(c)) {
    throw std::invalid_argument(std::string(to_string(c)) + " bound needs n >= " +
                                std::to_string(upper_bound_threshold(c)));
  }
  switch (c) {
    case BoundClass::BPlus:
    case BoundClass::BPlusPlus: return n - 6;
    case BoundClass::ThetaUnbalanced: return n - 4;
    case BoundClass::BicyclicUnbalanced: return n - 3;
  }
  return n;
}

bool is_max_nullity_extremal(const SignedGraph& g) {
  if (!g.is_connected() || g.size() != g.order() + 1) {
    throw std::invalid_argument("expected a connected bicyclic graph");
  }
  if (is_balanced(g).balanced) throw std::invalid_argument("expected an unbalanced graph");
  // The only connected graph with 4 vertices and 5 edges is K4 - e.
  if (g.order() != 4) return false;
  int negative_triangles = 0;
  for (const auto& cycle : find_cycles(g)) {
    if (cycle.length() == 3 && cycle.sign < 0) ++negative_triangles;
  }
  return negative_triangles == 2;
}

}  // namespace sgraph
