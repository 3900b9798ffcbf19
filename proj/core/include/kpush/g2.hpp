#pragma once

// The homogeneous spaces G2/P2 (inside Gr(2,7)) and G2/B.

#include <utility>
#include <vector>

#include "kpush/algebra.hpp"
#include "kpush/characters.hpp"
#include "kpush/linalg.hpp"
#include "kpush/polyfam.hpp"

namespace kpush {

// z1, z2, t1, t2.
TablePtr g2_table();

struct G2Data {
  TablePtr table;
  // t1, t2, t1/t2, 1, t2/t1, 1/t2, 1/t1: the torus characters of the
  // 7-dimensional representation.
  CharacterList t_flat;
  // Tangent weights of G2/P2 at the identity coset.
  CharacterList identity_tangent;
  // Tangent weights of G2/B at the identity (inverses of the positive roots).
  CharacterList identity_tangent_b;
  // t1 -> t2, t2 -> t2/t1 (order 6), and t1 <-> t2. Both fix z1, z2.
  MonomialMap xi;
  MonomialMap swap;
  LaurentPolynomial a_poly;  // 3 - t1 - 1/t2 - t2/t1
  LaurentPolynomial b_poly;  // 3 - t2 - 1/t1 - t1/t2
  LaurentPolynomial u_z;     // z1 + 1/z1 + z2 + 1/z2 + z1 z2 + 1/(z1 z2) - 6
  LaurentPolynomial u_t;     // u_z(t1, 1/t2)
  LaurentPolynomial u_class;
};

// Built once over g2_table().
const G2Data& g2_data();

// z1 z2 (1-z1)(1-z2)(1-z1 z2)(u_z - u_t).
LaurentPolynomial u_class();

// The 12 Weyl group elements as substitutions on t: xi^k, then xi^k after the
// swap, k = 0..5.
std::vector<MonomialMap> g2_weyl_group();

// f(t1, t2) / ((1-t1)(1-t2)(1-t1 t2)(1-t1^2/t2)(1-t2^2/t1)).
RationalExpression theta(const LaurentPolynomial& f);

// sum_{k=0..5} of theta(f) transported by xi^k. f must be symmetric in z1, z2.
LaurentPolynomial cyclic_pushforward(const LaurentPolynomial& f);

// Basis of the 2 x 5 rectangle, in rectangle_partitions order.
std::vector<Partition> g2_basis();

// cyclic_pushforward of G_I for every basis partition I.
std::vector<std::pair<Partition, LaurentPolynomial>> grothendieck_table();

// Push-forward from Gr(2,7) with the torus acting through t_flat; f must be
// symmetric in z1, z2.
LaurentPolynomial gr27_pushforward(const LaurentPolynomial& f);

struct IntersectionMatrix {
  std::vector<Partition> basis;
  PolyMatrix entries;  // entries[i][j] = gr27_pushforward(G_i G_j)
};

IntersectionMatrix intersection_matrix();

// Coefficients c_I with sum_I c_I m_{I,J} = cyclic_pushforward(G_J).
std::vector<std::pair<Partition, LaurentPolynomial>> fundamental_class_solve(
    const IntersectionMatrix& matrix, LaurentPolynomial* determinant = nullptr);
std::vector<std::pair<Partition, LaurentPolynomial>> fundamental_class_solve();

// sum_I c_I G_I for a coefficient list as returned above.
LaurentPolynomial class_from_coefficients(const std::vector<std::pair<Partition, LaurentPolynomial>>& coeffs);

// True iff both lifts pair identically with every basis class on Gr(2,7).
bool lift_pairing_check(const LaurentPolynomial& lift1, const LaurentPolynomial& lift2);

enum class G2BMethod { residue, weyl_sum };

LaurentPolynomial g2b_pushforward(const LaurentPolynomial& f, G2BMethod method);

// Table with the two abstract symbols A, B.
TablePtr ab_table();

// compose(q, {A -> a_poly, B -> b_poly}) == p.
bool verify_ab_expression(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial expand_ab(const LaurentPolynomial& q);

}  // namespace kpush
