#pragma once

// Fraction-free (Bareiss) elimination over Laurent polynomials.

#include <vector>

#include "kpush/algebra.hpp"

namespace kpush {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

LaurentPolynomial bareiss_determinant(PolyMatrix m);

// Solves m x = rhs. The solution must have Laurent polynomial entries (for
// instance when det m is a unit); otherwise NotDivisible is raised. Throws
// InvalidArgument when m is singular.
std::vector<LaurentPolynomial> bareiss_solve(PolyMatrix m, std::vector<LaurentPolynomial> rhs,
                                             LaurentPolynomial* determinant = nullptr);

}  // namespace kpush
