#include "kpush/residue.hpp"

#include <algorithm>

namespace kpush {

namespace {

bool contains(const std::vector<Var>& vars, Var v) {
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

void require_residue_var(const ResidueForm& form, Var var) {
  if (!contains(form.residue_vars(), var)) {
    throw InvalidArgument("'" + form.table()->name(var) + "' is not a residue variable of the form");
  }
}

// Coefficient of var^-1 in numerator / prod (1 - m), expanding each factor as
// a geometric series in var. All factors must involve var.
LaurentPolynomial coefficient_of_inverse(const LaurentPolynomial& numerator,
                                         const std::vector<Monomial>& factors, Var var) {
  const auto& table = numerator.table();
  LaurentPolynomial result(table);
  if (numerator.is_zero()) return result;
  const auto [lo, hi] = numerator.degree_range(var);
  (void)hi;
  const int order = -1 - lo;
  if (order < 0) return result;

  // series[d] = coefficient of var^d in prod 1/(1 - m), for 0 <= d <= order.
  std::vector<LaurentPolynomial> series(order + 1, LaurentPolynomial(table));
  series[0] = LaurentPolynomial::constant(table, 1);
  for (const auto& m : factors) {
    const int k = m.exponent(var);
    const LaurentPolynomial c = LaurentPolynomial::monomial(table, m.without(var));
    // Multiplying by 1/(1 - c var^k): s_new[d] = s[d] + c * s_new[d - k].
    for (int d = k; d <= order; ++d) {
      if (!series[d - k].is_zero()) series[d] += c * series[d - k];
    }
  }
  for (auto& [d, coeff] : numerator.split_by(var)) {
    const int need = -1 - d;
    if (need < 0) continue;
    result += coeff * series[need];
  }
  return result;
}

}  // namespace

ResidueForm::ResidueForm(Unchecked, Rational scalar, LaurentPolynomial numerator, CharacterList factors,
                         std::vector<Var> residue_vars)
    : scalar_(std::move(scalar)),
      numerator_(std::move(numerator)),
      factors_(std::move(factors)),
      residue_vars_(std::move(residue_vars)) {}

ResidueForm::ResidueForm(Rational scalar, LaurentPolynomial numerator, CharacterList factors,
                         std::vector<Var> residue_vars, bool dlog)
    : scalar_(std::move(scalar)),
      numerator_(std::move(numerator)),
      factors_(std::move(factors)),
      residue_vars_(std::move(residue_vars)),
      dlog_(dlog) {
  const auto& table = numerator_.table();
  if (!same_table(table, factors_.table())) throw MixedTablesError("form numerator and factors differ in table");
  for (std::size_t i = 0; i < residue_vars_.size(); ++i) {
    if (residue_vars_[i] >= table->size()) throw InvalidArgument("residue variable out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (residue_vars_[i] == residue_vars_[j]) throw InvalidArgument("repeated residue variable");
    }
  }
  for (const auto& m : factors_) {
    int hits = 0;
    for (Var v : residue_vars_) {
      const int e = m.exponent(v);
      if (e == 0) continue;
      if (e < 0) {
        throw InvalidArgument("denominator factor (1 - " + character_to_string(m, *table) +
                              ") has a negative exponent in " + table->name(v));
      }
      ++hits;
    }
    if (hits != 1) {
      throw InvalidArgument("denominator factor (1 - " + character_to_string(m, *table) +
                            ") must involve exactly one residue variable");
    }
  }
  if (dlog) {
    Monomial measure;
    for (Var v : residue_vars_) measure.set(v, -1);
    numerator_ *= measure;
  }
}

std::string ResidueForm::to_string() const {
  const auto& table = *numerator_.table();
  LaurentPolynomial shown = numerator_;
  if (dlog_) {
    Monomial measure;
    for (Var v : residue_vars_) measure.set(v, 1);
    shown *= measure;
  }
  std::string out = scalar_.get_str() + " * (" + shown.to_string() + ")";
  if (!factors_.empty()) {
    out += " / (";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += "*";
      out += "(1 - " + character_to_string(factors_[i], table) + ")";
    }
    out += ")";
  }
  if (!residue_vars_.empty()) {
    std::string vars;
    for (std::size_t i = 0; i < residue_vars_.size(); ++i) {
      if (i) vars += dlog_ ? ", " : " ";
      vars += dlog_ ? table.name(residue_vars_[i]) : "d" + table.name(residue_vars_[i]);
    }
    out += dlog_ ? " dlog(" + vars + ")" : " " + vars;
  }
  return out;
}

ResidueForm residue_at_zero(const ResidueForm& form, Var var) {
  require_residue_var(form, var);
  std::vector<Monomial> mine;
  CharacterList rest(form.table());
  for (const auto& m : form.factors()) {
    if (m.involves(var)) {
      mine.push_back(m);
    } else {
      rest.push_back(m);
    }
  }
  std::vector<Var> vars;
  for (Var v : form.residue_vars()) {
    if (v != var) vars.push_back(v);
  }
  return ResidueForm(ResidueForm::Unchecked{}, form.scalar(), coefficient_of_inverse(form.numerator(), mine, var),
                     std::move(rest), std::move(vars));
}

ResidueForm residue_at_infinity(const ResidueForm& form, Var var) {
  require_residue_var(form, var);
  const auto& table = form.table();
  // var = 1/w, reusing the symbol var for w: dz = -dw / w^2 and
  // 1 - c z^k = -c w^-k (1 - w^k / c).
  MonomialMap flip = MonomialMap::identity(table, table);
  flip.set(var, Monomial::of(var, -1));
  LaurentPolynomial numerator = flip.apply(form.numerator());
  numerator *= Monomial::of(var, -2);
  Rational sign = -1;
  CharacterList factors(table);
  std::vector<Monomial> mine;
  Monomial shift;
  for (const auto& m : form.factors()) {
    if (!m.involves(var)) {
      factors.push_back(m);
      continue;
    }
    const int k = m.exponent(var);
    const Monomial c = m.without(var);
    shift *= Monomial::of(var, k) / c;
    sign = -sign;
    mine.push_back(Monomial::of(var, k) / c);
  }
  numerator *= shift;
  numerator *= sign;
  ResidueForm flipped(ResidueForm::Unchecked{}, form.scalar(), std::move(numerator),
                      CharacterList(table, mine) + factors, form.residue_vars());
  return residue_at_zero(flipped, var);
}

LaurentPolynomial iterated_residue(const ResidueForm& form, std::optional<std::span<const Var>> order) {
  std::vector<Var> sequence;
  if (order) {
    sequence.assign(order->begin(), order->end());
    auto sorted = sequence;
    auto expected = form.residue_vars();
    std::sort(sorted.begin(), sorted.end());
    std::sort(expected.begin(), expected.end());
    if (sorted != expected) throw InvalidArgument("residue order must be a permutation of the residue variables");
  } else {
    sequence.assign(form.residue_vars().rbegin(), form.residue_vars().rend());
  }
  ResidueForm current = form;
  for (Var v : sequence) {
    ResidueForm at_zero = residue_at_zero(current, v);
    ResidueForm at_infinity = residue_at_infinity(current, v);
    // Both branches keep the same remaining factors and variables.
    current = ResidueForm(ResidueForm::Unchecked{}, current.scalar(),
                          at_zero.numerator() + at_infinity.numerator(), at_zero.factors(),
                          at_zero.residue_vars());
  }
  LaurentPolynomial out = current.numerator();
  out *= current.scalar();
  return out;
}

}  // namespace kpush
