#include "kpush/cohomology.hpp"

namespace kpush {

namespace {

LaurentPolynomial lin(const TablePtr& table, int a, int b) {
  Monomial t1 = Monomial::of(table->at("t1")), t2 = Monomial::of(table->at("t2"));
  return LaurentPolynomial::monomial(table, t1, a) + LaurentPolynomial::monomial(table, t2, b);
}

AdditiveWeightData build_additive() {
  const TablePtr table = cohomology_table();
  PolynomialAssignment xi(table, table);
  xi.set("x1", LaurentPolynomial::variable(table, "x1"));
  xi.set("x2", LaurentPolynomial::variable(table, "x2"));
  xi.set("t1", lin(table, 0, 1));
  xi.set("t2", lin(table, -1, 1));
  return AdditiveWeightData{
      table,
      {lin(table, 0, -1), lin(table, 1, -2), lin(table, -1, 0), lin(table, -2, 1), lin(table, -1, -1)},
      {lin(table, 1, 0), lin(table, 0, 1), lin(table, 1, -1), lin(table, 0, 0), lin(table, -1, 1), lin(table, 0, -1),
       lin(table, -1, 0)},
      std::move(xi)};
}

// Assignment x1 -> -a, x2 -> -b, t's fixed.
PolynomialAssignment roots_at(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const auto& table = a.table();
  PolynomialAssignment s(table, table);
  s.set("x1", -a);
  s.set("x2", -b);
  s.set("t1", LaurentPolynomial::variable(table, "t1"));
  s.set("t2", LaurentPolynomial::variable(table, "t2"));
  return s;
}

void require_polynomial(const LaurentPolynomial& f) {
  for (const auto& t : f.terms()) {
    for (Var v : t.monomial.support()) {
      if (t.monomial.exponent(v) < 0) throw InvalidArgument("cohomology classes must be polynomials");
    }
  }
}

}  // namespace

TablePtr cohomology_table() {
  static const TablePtr table = VariableTable::create(
      {{"x1", VarClass::residue}, {"x2", VarClass::residue}, {"t1", VarClass::parameter}, {"t2", VarClass::parameter}});
  return table;
}

const AdditiveWeightData& additive_weight_data() {
  static const AdditiveWeightData data = build_additive();
  return data;
}

Monomial exponentiate(const LaurentPolynomial& linear_form) {
  const auto& table = linear_form.table();
  Monomial out;
  for (const auto& t : linear_form.terms()) {
    if (t.monomial.total_degree() != 1 || t.monomial.support().size() != 1 || t.coeff.get_den() != 1) {
      throw InvalidArgument("not an integral linear form: " + linear_form.to_string());
    }
    const Var v = t.monomial.support()[0];
    out.set(v, static_cast<int>(t.coeff.get_num().get_si()));
  }
  (void)table;
  return out;
}

LaurentPolynomial g2_integral(const LaurentPolynomial& f) {
  const auto& d = additive_weight_data();
  const auto g = rebase(f, d.table);
  require_polynomial(g);
  std::vector<FactoredFraction> terms;
  LaurentPolynomial r1 = LaurentPolynomial::variable(d.table, "t1");
  LaurentPolynomial r2 = LaurentPolynomial::variable(d.table, "t2");
  std::vector<LaurentPolynomial> tangent = d.g2_tangent;
  for (int k = 0; k < 6; ++k) {
    terms.push_back(FactoredFraction{compose(g, roots_at(r1, r2)), tangent});
    r1 = compose(r1, d.xi);
    r2 = compose(r2, d.xi);
    for (auto& w : tangent) w = compose(w, d.xi);
  }
  return rational_sum_to_polynomial(std::span<const FactoredFraction>(terms));
}

LaurentPolynomial gr27_integral(const LaurentPolynomial& f) {
  const auto& d = additive_weight_data();
  const auto g = rebase(f, d.table);
  require_polynomial(g);
  MonomialMap swap = MonomialMap::identity(d.table, d.table);
  swap.set("x1", Monomial::of(d.table->at("x2")));
  swap.set("x2", Monomial::of(d.table->at("x1")));
  if (!(swap.apply(g) == g)) throw SymmetryViolation("gr27_integral: f must be symmetric in x1, x2");
  std::vector<FactoredFraction> terms;
  const auto& w = d.t_flat;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      FactoredFraction term{compose(g, roots_at(w[i], w[j])), {}};
      for (std::size_t a : {i, j}) {
        for (std::size_t b = 0; b < w.size(); ++b) {
          if (b != i && b != j) term.factors.push_back(w[b] - w[a]);
        }
      }
      terms.push_back(std::move(term));
    }
  }
  return rational_sum_to_polynomial(std::span<const FactoredFraction>(terms));
}

LaurentPolynomial g2_cohomology_class() {
  const auto& table = cohomology_table();
  auto x1 = LaurentPolynomial::variable(table, "x1");
  auto x2 = LaurentPolynomial::variable(table, "x2");
  auto t1 = LaurentPolynomial::variable(table, "t1");
  auto t2 = LaurentPolynomial::variable(table, "t2");
  auto q = t1 * t1 - t1 * t2 + t2 * t2;
  return 2 * x1 * x2 * (x1 + x2) * ((x1 * x1 + x1 * x2 + x2 * x2) - q);
}

CohomologyClassReport cohomology_class_check() {
  const auto& table = cohomology_table();
  const auto cls = g2_cohomology_class();
  CohomologyClassReport report{true, false, LaurentPolynomial(table)};
  for (const auto& p : rectangle_partitions(2, 5)) {
    const auto s = schur_pair(p, table);
    if (!(gr27_integral(s * cls) == g2_integral(s))) {
      report.pairings_match = false;
      break;
    }
  }
  // Peel off the top-degree Schur terms, then read the S21 coefficient.
  const auto rest = cls - 2 * schur_pair(4, 1, table) - 2 * schur_pair(3, 2, table);
  const auto s21 = schur_pair(2, 1, table);
  if (auto c = try_exact_divide(rest, s21)) {
    bool free_of_x = !c->involves(table->at("x1")) && !c->involves(table->at("x2"));
    if (free_of_x) {
      report.s21_coefficient = *c;
      auto t1 = LaurentPolynomial::variable(table, "t1");
      auto t2 = LaurentPolynomial::variable(table, "t2");
      report.schur_expansion_matches = *c == -2 * (t1 * t1 - t1 * t2 + t2 * t2);
    }
  }
  return report;
}

}  // namespace kpush
