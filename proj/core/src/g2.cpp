#include "kpush/g2.hpp"

#include "kpush/spaces.hpp"

namespace kpush {

namespace {

LaurentPolynomial poly(const TablePtr& table, const Monomial& m, const Rational& c = 1) {
  return LaurentPolynomial::monomial(table, m, c);
}

Monomial var(const TablePtr& table, std::string_view name, int e = 1) {
  return Monomial::of(table->at(name), e);
}

MonomialMap z_swap(const TablePtr& table) {
  MonomialMap map = MonomialMap::identity(table, table);
  map.set("z1", var(table, "z2"));
  map.set("z2", var(table, "z1"));
  return map;
}

void require_z_symmetric(const LaurentPolynomial& f, const char* who) {
  if (!(z_swap(f.table()).apply(f) == f)) {
    throw SymmetryViolation(std::string(who) + ": f must be symmetric in z1, z2");
  }
}

LaurentPolynomial on_g2_table(const LaurentPolynomial& f) { return rebase(f, g2_table()); }

G2Data build_data() {
  const TablePtr table = g2_table();
  const Monomial z1 = var(table, "z1"), z2 = var(table, "z2");
  const Monomial t1 = var(table, "t1"), t2 = var(table, "t2");
  const auto one = LaurentPolynomial::constant(table, 1);

  MonomialMap xi = MonomialMap::identity(table, table);
  xi.set("t1", t2);
  xi.set("t2", t2 / t1);
  MonomialMap swap = MonomialMap::identity(table, table);
  swap.set("t1", t2);
  swap.set("t2", t1);

  CharacterList identity_tangent(table, {t2.inverse(), t1 / t2.pow(2), t1.inverse(), t2 / t1.pow(2), (t1 * t2).inverse()});
  CharacterList identity_tangent_b(table, {t1.inverse(), t2.inverse(), (t1 * t2).inverse(), t2 / t1.pow(2), t1 / t2.pow(2), t2 / t1});

  auto a_poly = 3 * one - poly(table, t1) - poly(table, t2.inverse()) - poly(table, t2 / t1);
  auto b_poly = 3 * one - poly(table, t2) - poly(table, t1.inverse()) - poly(table, t1 / t2);

  LaurentPolynomial u_z(table);
  for (const auto& m : {z1, z1.inverse(), z2, z2.inverse(), z1 * z2, (z1 * z2).inverse()}) u_z += poly(table, m);
  u_z -= 6 * one;
  MonomialMap to_t = MonomialMap::identity(table, table);
  to_t.set("z1", t1);
  to_t.set("z2", t2.inverse());
  auto u_t = to_t.apply(u_z);

  auto u = poly(table, z1 * z2) * (one - poly(table, z1)) * (one - poly(table, z2)) *
           (one - poly(table, z1 * z2)) * (u_z - u_t);

  return G2Data{table,
                standard_set(table, StandardSet::T_flat),
                std::move(identity_tangent),
                std::move(identity_tangent_b),
                std::move(xi),
                std::move(swap),
                std::move(a_poly),
                std::move(b_poly),
                std::move(u_z),
                std::move(u_t),
                std::move(u)};
}

// Factors of the theta denominator, written out as printed.
std::vector<LaurentPolynomial> theta_factors(const TablePtr& table) {
  const Monomial t1 = var(table, "t1"), t2 = var(table, "t2");
  const auto one = LaurentPolynomial::constant(table, 1);
  return {one - poly(table, t1), one - poly(table, t2), one - poly(table, t1 * t2),
          one - poly(table, t1.pow(2) / t2), one - poly(table, t2.pow(2) / t1)};
}

struct Gr27Localizer {
  std::vector<MonomialMap> substitutions;
  CommonDenominator denominator;
};

Gr27Localizer build_gr27() {
  const auto& d = g2_data();
  const auto& table = d.table;
  const auto& flat = d.t_flat;
  std::vector<MonomialMap> subs;
  std::vector<std::vector<LaurentPolynomial>> factor_lists;
  const auto one = LaurentPolynomial::constant(table, 1);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    for (std::size_t j = i + 1; j < flat.size(); ++j) {
      MonomialMap s = MonomialMap::identity(table, table);
      s.set("z1", flat[i]);
      s.set("z2", flat[j]);
      subs.push_back(std::move(s));
      // Tangent b/a for a in the pair, b outside; bracket factor 1 - a/b.
      std::vector<LaurentPolynomial> factors;
      for (std::size_t a : {i, j}) {
        for (std::size_t b = 0; b < flat.size(); ++b) {
          if (b == i || b == j) continue;
          factors.push_back(one - poly(table, flat[a] / flat[b]));
        }
      }
      factor_lists.push_back(std::move(factors));
    }
  }
  return Gr27Localizer{std::move(subs), CommonDenominator(table, factor_lists)};
}

const Gr27Localizer& gr27() {
  static const Gr27Localizer instance = build_gr27();
  return instance;
}

}  // namespace

TablePtr g2_table() {
  static const TablePtr table = VariableTable::standard(2, 2);
  return table;
}

const G2Data& g2_data() {
  static const G2Data data = build_data();
  return data;
}

LaurentPolynomial u_class() { return g2_data().u_class; }

std::vector<MonomialMap> g2_weyl_group() {
  const auto& d = g2_data();
  std::vector<MonomialMap> out;
  MonomialMap power = MonomialMap::identity(d.table, d.table);
  for (int k = 0; k < 6; ++k) {
    out.push_back(power);
    power = d.xi.after(power);
  }
  for (int k = 0; k < 6; ++k) out.push_back(out[k].after(d.swap));
  return out;
}

RationalExpression theta(const LaurentPolynomial& f) {
  const auto& table = g2_table();
  const auto g = on_g2_table(f);
  MonomialMap at_identity = MonomialMap::identity(table, table);
  at_identity.set("z1", var(table, "t1"));
  at_identity.set("z2", var(table, "t2"));
  LaurentPolynomial den = LaurentPolynomial::constant(table, 1);
  for (const auto& factor : theta_factors(table)) den *= factor;
  return RationalExpression(at_identity.apply(g), den);
}

LaurentPolynomial cyclic_pushforward(const LaurentPolynomial& f) {
  const auto& d = g2_data();
  const auto g = on_g2_table(f);
  require_z_symmetric(g, "cyclic_pushforward");
  const auto& table = d.table;
  MonomialMap power = MonomialMap::identity(table, table);
  std::vector<FactoredFraction> terms;
  for (int k = 0; k < 6; ++k) {
    // theta(f) transported by xi^k: z_i -> xi^k(t_i); parameters occurring in
    // f itself are equivariant constants and stay put.
    MonomialMap point = MonomialMap::identity(table, table);
    point.set("z1", power.apply(var(table, "t1")));
    point.set("z2", power.apply(var(table, "t2")));
    FactoredFraction term{point.apply(g), {}};
    for (const auto& factor : theta_factors(table)) term.factors.push_back(power.apply(factor));
    terms.push_back(std::move(term));
    power = d.xi.after(power);
  }
  return rational_sum_to_polynomial(std::span<const FactoredFraction>(terms));
}

std::vector<Partition> g2_basis() { return rectangle_partitions(2, 5); }

std::vector<std::pair<Partition, LaurentPolynomial>> grothendieck_table() {
  std::vector<std::pair<Partition, LaurentPolynomial>> out;
  for (const auto& p : g2_basis()) out.emplace_back(p, cyclic_pushforward(grothendieck_pair(p, g2_table())));
  return out;
}

LaurentPolynomial gr27_pushforward(const LaurentPolynomial& f) {
  const auto g = on_g2_table(f);
  require_z_symmetric(g, "gr27_pushforward");
  const auto& loc = gr27();
  std::vector<LaurentPolynomial> numerators;
  numerators.reserve(loc.substitutions.size());
  for (const auto& s : loc.substitutions) numerators.push_back(s.apply(g));
  return loc.denominator.sum(numerators);
}

IntersectionMatrix intersection_matrix() {
  IntersectionMatrix out{g2_basis(), {}};
  const std::size_t n = out.basis.size();
  std::vector<LaurentPolynomial> classes;
  for (const auto& p : out.basis) classes.push_back(grothendieck_pair(p, g2_table()));
  out.entries.assign(n, std::vector<LaurentPolynomial>(n, LaurentPolynomial(g2_table())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.entries[i][j] = gr27_pushforward(classes[i] * classes[j]);
      out.entries[j][i] = out.entries[i][j];
    }
  }
  return out;
}

std::vector<std::pair<Partition, LaurentPolynomial>> fundamental_class_solve(const IntersectionMatrix& matrix,
                                                                            LaurentPolynomial* determinant) {
  const std::size_t n = matrix.basis.size();
  // sum_I c_I m_{I,J} = b_J is the transposed system.
  PolyMatrix transposed(n, std::vector<LaurentPolynomial>(n, LaurentPolynomial(g2_table())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) transposed[j][i] = matrix.entries[i][j];
  }
  std::vector<LaurentPolynomial> rhs;
  for (const auto& p : matrix.basis) rhs.push_back(cyclic_pushforward(grothendieck_pair(p, g2_table())));
  auto solution = bareiss_solve(std::move(transposed), std::move(rhs), determinant);
  std::vector<std::pair<Partition, LaurentPolynomial>> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(matrix.basis[i], std::move(solution[i]));
  return out;
}

std::vector<std::pair<Partition, LaurentPolynomial>> fundamental_class_solve() {
  return fundamental_class_solve(intersection_matrix());
}

LaurentPolynomial class_from_coefficients(const std::vector<std::pair<Partition, LaurentPolynomial>>& coeffs) {
  LaurentPolynomial out(g2_table());
  for (const auto& [p, c] : coeffs) {
    if (!c.is_zero()) out += on_g2_table(c) * grothendieck_pair(p, g2_table());
  }
  return out;
}

bool lift_pairing_check(const LaurentPolynomial& lift1, const LaurentPolynomial& lift2) {
  const auto a = on_g2_table(lift1), b = on_g2_table(lift2);
  const auto difference = a - b;
  for (const auto& p : g2_basis()) {
    if (!gr27_pushforward(grothendieck_pair(p, g2_table()) * difference).is_zero()) return false;
  }
  return true;
}

LaurentPolynomial g2b_pushforward(const LaurentPolynomial& f, G2BMethod method) {
  const auto space = SpaceDescriptor::g2b();
  if (method == G2BMethod::weyl_sum) return localization_pushforward(space, f);
  return residue_pushforward(space, f);
}

TablePtr ab_table() {
  static const TablePtr table =
      VariableTable::create({{"A", VarClass::parameter}, {"B", VarClass::parameter}});
  return table;
}

LaurentPolynomial expand_ab(const LaurentPolynomial& q) {
  const auto& d = g2_data();
  PolynomialAssignment assign(q.table(), d.table);
  for (std::size_t i = 0; i < q.table()->size(); ++i) {
    const auto& name = q.table()->name(static_cast<Var>(i));
    if (name == "A") {
      assign.set(static_cast<Var>(i), d.a_poly);
    } else if (name == "B") {
      assign.set(static_cast<Var>(i), d.b_poly);
    } else if (d.table->find(name)) {
      assign.set(static_cast<Var>(i), LaurentPolynomial::variable(d.table, name));
    }
  }
  return compose(q, assign);
}

bool verify_ab_expression(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return expand_ab(q) == on_g2_table(p);
}

}  // namespace kpush
