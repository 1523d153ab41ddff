#include "sgn/exact_matrix.hpp"

#include <sstream>
#include <utility>

namespace sgraph {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Integer ExactMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Integer sum = 0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

CharPoly::CharPoly(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.front() != 1) {
    throw std::invalid_argument("characteristic polynomial must be monic");
  }
}

std::string CharPoly::to_string(const std::string& variable) const {
  std::ostringstream out;
  const int n = degree();
  bool first = true;
  for (int i = 0; i <= n; ++i) {
    const Integer& c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int power = n - i;
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || power == 0) out << magnitude.get_str();
    if (power >= 1) out << variable;
    if (power >= 2) out << '^' << power;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

ExactMatrix adjacency_matrix(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  ExactMatrix a(n, n);
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.sign;
    a(e.v, e.u) = e.sign;
  }
  return a;
}

namespace {

struct EliminationResult {
  std::size_t rank = 0;
  int swaps = 0;
  Integer last_pivot = 1;
};

/// In-place fraction-free row echelon reduction. After processing pivot k
/// every entry below and right of it is a (k+1)-minor of the input, so the
/// division by the previous pivot is exact.
EliminationResult bareiss(ExactMatrix& m) {
  EliminationResult result;
  Integer previous = 1;
  Integer scratch;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) swap(m(pivot, c), m(row, c));
      ++result.swaps;
    }
    const Integer& p = m(row, col);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const Integer factor = m(r, col);
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        scratch = p * m(r, c);
        scratch -= factor * m(row, c);
        mpz_divexact(m(r, c).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      m(r, col) = 0;
    }
    previous = p;
    ++row;
  }
  result.rank = row;
  result.last_pivot = previous;
  return result;
}

}  // namespace

std::size_t rank(ExactMatrix m) { return bareiss(m).rank; }

Integer determinant(ExactMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto result = bareiss(m);
  if (result.rank < m.rows()) return 0;
  Integer det = m(m.rows() - 1, m.cols() - 1);
  if (result.swaps % 2 != 0) det = -det;
  return det;
}

CharPoly char_poly(const ExactMatrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> coeffs(n + 1);
  coeffs[0] = 1;
  // M_1 = I, a_k = -tr(A M_k) / k, M_(k+1) = A M_k + a_k I.
  ExactMatrix m = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix am = a * m;
    Integer t = am.trace();
    Integer k_big = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(t.get_mpz_t(), k_big.get_mpz_t())) {
      throw std::logic_error("Faddeev-LeVerrier division was not exact");
    }
    mpz_divexact(coeffs[k].get_mpz_t(), t.get_mpz_t(), k_big.get_mpz_t());
    coeffs[k] = -coeffs[k];
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) am(i, i) += coeffs[k];
      m = std::move(am);
    }
  }
  return CharPoly(std::move(coeffs));
}

CharPoly char_poly_interpolated(const ExactMatrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();

  std::vector<mpq_class> xs, table;
  for (std::size_t i = 0; i <= n; ++i) {
    long magnitude = static_cast<long>((i + 1) / 2);
    long x = (i % 2 == 1) ? magnitude : -magnitude;
    ExactMatrix shifted(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) shifted(r, c) = -a(r, c);
      shifted(r, r) += x;
    }
    xs.emplace_back(x);
    table.emplace_back(determinant(std::move(shifted)));
  }
  // Newton divided differences, in place.
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t i = n; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  // Expand the Newton form into monomial coefficients (index = power).
  std::vector<mpq_class> poly{table[n]};
  for (std::size_t i = n; i-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[i];
    }
    next[0] += table[i];
    poly = std::move(next);
  }
  std::vector<Integer> coeffs(n + 1);
  for (std::size_t power = 0; power <= n; ++power) {
    mpq_class c = power < poly.size() ? poly[power] : mpq_class(0);
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("interpolated characteristic polynomial is not integral");
    coeffs[n - power] = c.get_num();
  }
  return CharPoly(std::move(coeffs));
}

int zero_multiplicity(const CharPoly& p) {
  int k = 0;
  for (int i = p.degree(); i >= 1 && p.coefficient(i) == 0; --i) ++k;
  return k;
}

namespace {

// Every intermediate Bareiss entry of a {-1, 0, 1} matrix of order n is a
// minor bounded by n^(n/2), so products stay below n^n: exact in 128 bits
// up to this order.
constexpr int kNarrowRankLimit = 24;

int narrow_rank(const SignedGraph& g) {
  using Wide = __int128;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Wide> m(n * n, 0);
  for (const auto& e : g.edges()) {
    m[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = e.sign;
    m[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = e.sign;
  }
  Wide previous = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < n; ++c) std::swap(m[pivot * n + c], m[row * n + c]);
    }
    const Wide p = m[row * n + col];
    for (std::size_t r = row + 1; r < n; ++r) {
      const Wide factor = m[r * n + col];
      for (std::size_t c = col + 1; c < n; ++c) {
        m[r * n + c] = (p * m[r * n + c] - factor * m[row * n + c]) / previous;
      }
      m[r * n + col] = 0;
    }
    previous = p;
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace

int nullity_rank(const SignedGraph& g) {
  if (g.order() <= kNarrowRankLimit) return g.order() - narrow_rank(g);
  return g.order() - static_cast<int>(rank(adjacency_matrix(g)));
}

int nullity_charpoly(const SignedGraph& g) { return zero_multiplicity(char_poly(adjacency_matrix(g))); }

}  // namespace sgraph
