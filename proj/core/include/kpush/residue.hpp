#pragma once

// Iterated residues at 0 and infinity of factored rational forms
//
//   scalar * numerator / prod_k (1 - m_k)  dz_1 ... dz_r
//
// where every m_k involves exactly one residue variable, with a positive
// exponent. A dlog measure is absorbed into the numerator at construction.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kpush/algebra.hpp"
#include "kpush/characters.hpp"

namespace kpush {

class ResidueForm {
 public:
  // Validates the factor invariant. With dlog = true the numerator is
  // multiplied by prod z^-1 over residue_vars.
  ResidueForm(Rational scalar, LaurentPolynomial numerator, CharacterList factors,
              std::vector<Var> residue_vars, bool dlog = true);

  const Rational& scalar() const { return scalar_; }
  const LaurentPolynomial& numerator() const { return numerator_; }
  const CharacterList& factors() const { return factors_; }
  const std::vector<Var>& residue_vars() const { return residue_vars_; }
  const TablePtr& table() const { return numerator_.table(); }

  // "1/2 * (N) / ((1 - m1)*(1 - m2)) dlog(z1, z2)". The dlog rendering is used
  // when the form was built with dlog = true and no residue has been taken.
  std::string to_string() const;

 private:
  friend ResidueForm residue_at_zero(const ResidueForm&, Var);
  friend ResidueForm residue_at_infinity(const ResidueForm&, Var);
  friend LaurentPolynomial iterated_residue(const ResidueForm&, std::optional<std::span<const Var>>);
  struct Unchecked {};
  ResidueForm(Unchecked, Rational scalar, LaurentPolynomial numerator, CharacterList factors,
              std::vector<Var> residue_vars);

  Rational scalar_;
  LaurentPolynomial numerator_;
  CharacterList factors_;
  std::vector<Var> residue_vars_;
  bool dlog_ = false;
};

// Residue at var = 0; the result no longer involves var.
ResidueForm residue_at_zero(const ResidueForm& form, Var var);

// Residue at var = infinity, computed as a residue at 0 after var -> 1/var.
ResidueForm residue_at_infinity(const ResidueForm& form, Var var);

// (Res_0 + Res_inf) in every residue variable. `order` lists the variables in
// the order they are eliminated; by default the last residue variable goes
// first. The scalar is folded into the result.
LaurentPolynomial iterated_residue(const ResidueForm& form,
                                   std::optional<std::span<const Var>> order = std::nullopt);

}  // namespace kpush
