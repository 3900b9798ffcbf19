#pragma once

// Homogeneous spaces with a torus action: fixed-point data, the localization
// sum, and the residue formula for the push-forward to a point.

#include <string>
#include <string_view>
#include <vector>

#include "kpush/algebra.hpp"
#include "kpush/characters.hpp"
#include "kpush/residue.hpp"

namespace kpush {

enum class SpaceKind {
  grassmannian,           // gr:m,n
  grassmannian_two_sets,  // gr2:m,n
  lagrangian,             // lg:n
  orthogonal_even,        // ogE:n   (OG(n, 2n))
  orthogonal_odd,         // ogO:n   (OG(n, 2n+1))
  full_flag,              // fl:n
  quadric,                // q:n     (quadric of dimension 2n-2)
  g2p2,                   // g2p2
  g2b,                    // g2b
};

// full/compact for the Grassmannians; sharp (over T u T^-1 u {1}) and
// simplified (over T u T^-1) for the odd orthogonal Grassmannian. Every other
// space has the single variant full.
enum class FormulaVariant { full, compact, sharp, simplified };

std::string to_string(FormulaVariant v);
FormulaVariant parse_variant(std::string_view s);

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::grassmannian;
  int m = 0;
  int n = 0;

  static SpaceDescriptor grassmannian(int m, int n) { return {SpaceKind::grassmannian, m, n}; }
  static SpaceDescriptor grassmannian_two_sets(int m, int n) { return {SpaceKind::grassmannian_two_sets, m, n}; }
  static SpaceDescriptor lagrangian(int n) { return {SpaceKind::lagrangian, 0, n}; }
  static SpaceDescriptor orthogonal_even(int n) { return {SpaceKind::orthogonal_even, 0, n}; }
  static SpaceDescriptor orthogonal_odd(int n) { return {SpaceKind::orthogonal_odd, 0, n}; }
  static SpaceDescriptor full_flag(int n) { return {SpaceKind::full_flag, 0, n}; }
  static SpaceDescriptor quadric(int n) { return {SpaceKind::quadric, 0, n}; }
  static SpaceDescriptor g2p2() { return {SpaceKind::g2p2, 0, 2}; }
  static SpaceDescriptor g2b() { return {SpaceKind::g2b, 0, 2}; }

  // "gr:2,7", "gr2:2,7", "lg:3", "ogE:4", "ogO:3", "fl:4", "q:3", "g2p2", "g2b".
  static SpaceDescriptor parse(std::string_view s);
  std::string to_string() const;

  // Throws InvalidArgument on bad parameters.
  void validate() const;

  int dimension() const;
  int residue_count() const;
  int parameter_count() const;
  // z1..z{residue_count}, t1..t{parameter_count}.
  TablePtr table() const;

  std::vector<FormulaVariant> variants() const;

  bool operator==(const SpaceDescriptor&) const = default;
};

struct FixedPoint {
  // Residue variables to characters; parameters map to themselves.
  MonomialMap substitution;
  // Tangent weights; the localization denominator is bracket(tangent).
  CharacterList tangent;
};

std::vector<FixedPoint> fixed_points(const SpaceDescriptor& space);

// Throws SymmetryViolation unless f has the symmetry the space requires.
void check_symmetry(const SpaceDescriptor& space, const LaurentPolynomial& f);

// f is moved onto space.table() by variable name.
LaurentPolynomial localization_pushforward(const SpaceDescriptor& space, const LaurentPolynomial& f,
                                           bool verify_symmetry = true);

ResidueForm build_integrand(const SpaceDescriptor& space, const LaurentPolynomial& f,
                            FormulaVariant variant = FormulaVariant::full);

LaurentPolynomial residue_pushforward(const SpaceDescriptor& space, const LaurentPolynomial& f,
                                      FormulaVariant variant = FormulaVariant::full,
                                      bool verify_symmetry = true);

}  // namespace kpush
