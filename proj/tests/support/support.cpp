#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "kpush_cli/expression.hpp"

namespace kpush::testing {

LaurentPolynomial poly(const TablePtr& table, std::string_view src) { return cli::parse_polynomial(src, table); }

TablePtr t_table(int n) { return VariableTable::standard(0, static_cast<std::size_t>(n)); }

namespace {

void enumerate_multisets(const TablePtr& table, int n, int remaining, int first, Monomial current,
                         LaurentPolynomial& out) {
  if (remaining == 0) {
    out += LaurentPolynomial::monomial(table, current);
    return;
  }
  for (int i = first; i < n; ++i) {
    Monomial next = current;
    const Var v = table->at("t" + std::to_string(i + 1));
    next.set(v, next.exponent(v) - 1);
    enumerate_multisets(table, n, remaining - 1, i, next, out);
  }
}

}  // namespace

LaurentPolynomial complete_homogeneous_inverse(const TablePtr& table, int n, int l) {
  LaurentPolynomial out(table);
  enumerate_multisets(table, n, l, 0, Monomial{}, out);
  return out;
}

LaurentPolynomial schur_from_tableaux(int a, int b, const TablePtr& table) {
  // Row two is all 2s; column strictness forces the first b cells of row one
  // to be 1, the remaining a - b cells are any weakly increasing 1/2 word.
  const Var x1 = table->at("x1");
  const Var x2 = table->at("x2");
  LaurentPolynomial out(table);
  for (int ones = b; ones <= a; ++ones) {
    Monomial m;
    m.set(x1, ones);
    m.set(x2, a + b - ones);
    out += LaurentPolynomial::monomial(table, m);
  }
  return out;
}

LaurentPolynomial grothendieck_bialternant(const Partition& a, int n, const TablePtr& x_table) {
  const auto one = LaurentPolynomial::constant(x_table, 1);
  auto x = [&](int i) { return LaurentPolynomial::variable(x_table, x_table->name(static_cast<Var>(i))); };
  auto entry = [&](int i, int j) { return x(i).pow(a.part(j) + n - 1 - j) * (one - x(i)).pow(j); };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial det(x_table);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    LaurentPolynomial term = one;
    for (int i = 0; i < n; ++i) term *= entry(i, perm[i]);
    if (inversions % 2) det -= term;
    else det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  LaurentPolynomial vandermonde = one;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) vandermonde *= x(i) - x(j);
  }
  return exact_divide(det, vandermonde);
}

LaurentPolynomial finite_pole_sum(const ResidueForm& form) {
  const auto& table = form.table();
  if (form.residue_vars().size() != 1) throw InvalidArgument("finite_pole_sum needs one residue variable");
  const Var z = form.residue_vars()[0];
  std::vector<Monomial> poles;
  for (const auto& m : form.factors()) {
    if (m.exponent(z) != 1) throw InvalidArgument("finite_pole_sum needs simple linear factors");
    poles.push_back(Monomial::of(z) / m);
  }
  const auto one = LaurentPolynomial::constant(table, 1);
  LaurentPolynomial num(table);
  LaurentPolynomial den = one;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    MonomialMap at_pole = MonomialMap::identity(table, table);
    at_pole.set(z, poles[i]);
    // numerator() already carries the dz/z measure, so the residue at p_i is
    // -p_i * numerator(p_i) / prod_{j != i} (1 - p_i/p_j).
    LaurentPolynomial term_num = at_pole.apply(form.numerator()) * poles[i];
    LaurentPolynomial term_den = one;
    for (std::size_t j = 0; j < poles.size(); ++j) {
      if (j != i) term_den *= one - LaurentPolynomial::monomial(table, poles[i] / poles[j]);
    }
    num = num * term_den + term_num * den;
    den *= term_den;
  }
  return form.scalar() * exact_divide(num, den);
}

int expected_nonequivariant_pairing(const Partition& i, const Partition& j) {
  const int c1 = 5 - j.part(1);
  const int c2 = 5 - j.part(0);
  return i.part(0) <= c1 && i.part(1) <= c2 ? 1 : 0;
}

ResidueForm random_form(RandomSource& rng, const TablePtr& table, int residue_count, bool dlog) {
  std::vector<Var> zs;
  std::vector<Var> ts;
  for (Var v = 0; v < table->size(); ++v) {
    (table->var_class(v) == VarClass::residue ? zs : ts).push_back(v);
  }
  zs.resize(static_cast<std::size_t>(residue_count));
  CharacterList factors(table);
  const int count = rng.uniform(1, 4);
  for (int k = 0; k < count; ++k) {
    Monomial m = Monomial::of(zs[rng.uniform(0, residue_count - 1)], rng.uniform(1, 2));
    for (Var t : ts) m.set(t, rng.uniform(-1, 1));
    factors.push_back(m);
  }
  RandomPolyOptions options;
  options.max_exponent = 3;
  options.max_terms = 4;
  const auto numerator = random_laurent(rng, table, zs, ts, options);
  const Rational scalar = Rational(rng.uniform(1, 5)) / Rational(rng.uniform(1, 4));
  return ResidueForm(scalar, numerator, factors, zs, dlog);
}

Rational at_one(const LaurentPolynomial& p) {
  Rational sum = 0;
  for (const auto& term : p.terms()) sum += term.coeff;
  return sum;
}

}  // namespace kpush::testing
