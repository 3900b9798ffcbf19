#include "kpush/linalg.hpp"

#include <utility>

namespace kpush {

namespace {

// Forward elimination on the n x n block of a (which may carry extra columns).
// Returns the determinant of the block.
LaurentPolynomial eliminate(PolyMatrix& a, std::size_t n) {
  if (n == 0) throw InvalidArgument("empty matrix");
  for (const auto& row : a) {
    if (row.size() < n) throw InvalidArgument("matrix is not square");
  }
  const auto& table = a[0][0].table();
  const std::size_t width = a[0].size();
  LaurentPolynomial previous = LaurentPolynomial::constant(table, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    // Smallest nonzero pivot keeps the products cheap.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!a[i][k].is_zero() && (best == n || a[i][k].size() < a[best][k].size())) best = i;
    }
    if (best == n) return LaurentPolynomial(table);
    if (best != k) {
      std::swap(a[best], a[k]);
      negate = !negate;
    }
    const LaurentPolynomial pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const LaurentPolynomial factor = a[i][k];
      for (std::size_t j = k + 1; j < width; ++j) {
        LaurentPolynomial v = pivot * a[i][j];
        if (!factor.is_zero() && !a[k][j].is_zero()) v -= factor * a[k][j];
        a[i][j] = exact_divide(v, previous);
      }
      a[i][k] = LaurentPolynomial(table);
    }
    previous = pivot;
  }
  LaurentPolynomial det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

LaurentPolynomial bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  return eliminate(m, n);
}

std::vector<LaurentPolynomial> bareiss_solve(PolyMatrix m, std::vector<LaurentPolynomial> rhs,
                                             LaurentPolynomial* determinant) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw InvalidArgument("right-hand side has the wrong length");
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(std::move(rhs[i]));
  LaurentPolynomial det = eliminate(m, n);
  if (determinant) *determinant = det;
  if (det.is_zero()) throw InvalidArgument("singular system");
  const auto& table = det.table();
  std::vector<LaurentPolynomial> x(n, LaurentPolynomial(table));
  for (std::size_t i = n; i-- > 0;) {
    LaurentPolynomial acc = m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!m[i][j].is_zero() && !x[j].is_zero()) acc -= m[i][j] * x[j];
    }
    x[i] = exact_divide(acc, m[i][i]);
  }
  return x;
}

}  // namespace kpush
