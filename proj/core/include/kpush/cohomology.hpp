#pragma once

// Equivariant cohomology of G2/P2 and Gr(2,7) by the additive localization
// formula. Classes are polynomials in the Chern roots x1, x2 of the dual
// tautological bundle; weights are linear forms in t1, t2.

#include <vector>

#include "kpush/algebra.hpp"
#include "kpush/polyfam.hpp"

namespace kpush {

// x1, x2, t1, t2.
TablePtr cohomology_table();

struct AdditiveWeightData {
  TablePtr table;
  // -t2, t1 - 2 t2, -t1, t2 - 2 t1, -t1 - t2
  std::vector<LaurentPolynomial> g2_tangent;
  // t1, t2, t1 - t2, 0, t2 - t1, -t2, -t1
  std::vector<LaurentPolynomial> t_flat;
  // (t1, t2) -> (t2, t2 - t1)
  PolynomialAssignment xi;
};

const AdditiveWeightData& additive_weight_data();

// The multiplicative character of a linear form a t1 + b t2: t1^a t2^b.
Monomial exponentiate(const LaurentPolynomial& linear_form);

// Integral over G2/P2 of a polynomial in x1, x2 (and t1, t2).
LaurentPolynomial g2_integral(const LaurentPolynomial& f);

// Integral over Gr(2,7) with the torus acting through t_flat; f symmetric in
// x1, x2.
LaurentPolynomial gr27_integral(const LaurentPolynomial& f);

// 2 x1 x2 (x1 + x2) ((x1^2 + x1 x2 + x2^2) - (t1^2 - t1 t2 + t2^2)).
LaurentPolynomial g2_cohomology_class();

struct CohomologyClassReport {
  // Pairing of the class with each basis Schur class agrees with g2_integral.
  bool pairings_match = false;
  // The class equals 2 S41 + 2 S32 + c S21 with c = -2 (t1^2 - t1 t2 + t2^2).
  bool schur_expansion_matches = false;
  LaurentPolynomial s21_coefficient;
  bool ok() const { return pairings_match && schur_expansion_matches; }
};

CohomologyClassReport cohomology_class_check();

}  // namespace kpush
