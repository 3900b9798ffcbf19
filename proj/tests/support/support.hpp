#pragma once

// Shared helpers for unit and acceptance tests: polynomial builders,
// generators, and oracles that compute expected values by routes that do not
// go through the code under test.

#include <string_view>
#include <vector>

#include "kpush/algebra.hpp"
#include "kpush/polyfam.hpp"
#include "kpush/random.hpp"
#include "kpush/residue.hpp"

namespace kpush::testing {

// Parses src over `table` with the CLI expression grammar.
LaurentPolynomial poly(const TablePtr& table, std::string_view src);

// Table t1..tn (parameters only).
TablePtr t_table(int n);

// Complete homogeneous symmetric polynomial of degree l in 1/t1..1/tn,
// summed over all multisets by direct enumeration.
LaurentPolynomial complete_homogeneous_inverse(const TablePtr& table, int n, int l);

// Schur polynomial s_(a,b)(x1, x2) from semistandard tableaux with entries 1, 2.
LaurentPolynomial schur_from_tableaux(int a, int b, const TablePtr& table);

// Grothendieck polynomial in x1..xn as det(x_i^(a_j+n-j) (1-x_i)^(j-1)) / Vandermonde,
// the determinant expanded by permutations.
LaurentPolynomial grothendieck_bialternant(const Partition& a, int n, const TablePtr& x_table);

// For a one-variable form scalar * N(z) dz / prod (1 - z/p_j) with distinct
// monomials p_j: minus the sum of the finite residues,
// sum_i p_i N(p_i) / prod_{j != i} (1 - p_i/p_j), accumulated as plain fractions.
LaurentPolynomial finite_pole_sum(const ResidueForm& form);

// Expected nonequivariant pairing on Gr(2,7): 1 when I fits inside the
// rectangle complement of J, else 0. The complement is computed here directly.
int expected_nonequivariant_pairing(const Partition& i, const Partition& j);

// Random form with every factor in a single residue variable.
ResidueForm random_form(RandomSource& rng, const TablePtr& table, int residue_count, bool dlog = true);

// Evaluates every variable at 1.
Rational at_one(const LaurentPolynomial& p);

// Uniformly random permutation (Fisher-Yates over the given RNG).
template <class T>
void shuffle(RandomSource& rng, std::vector<T>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[rng.uniform(0, i)]);
}

}  // namespace kpush::testing
