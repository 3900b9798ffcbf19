#include "printing.hpp"

#include <algorithm>
#include <numeric>

#include "kpush/residue.hpp"
#include "kpush/spaces.hpp"
#include "support.hpp"

using namespace kpush;
using kpush::testing::poly;

namespace {

const TablePtr& zt() {
  static const TablePtr table = VariableTable::standard(1, 2);
  return table;
}

// num dz/z / prod(1 - m) in z1 over (z1, t1, t2).
ResidueForm form(std::string_view num, std::vector<std::string_view> factors) {
  CharacterList list(zt());
  for (auto f : factors) list.push_back(poly(zt(), f).terms()[0].monomial);
  return ResidueForm(1, poly(zt(), num), list, {0});
}

LaurentPolynomial value(const ResidueForm& f) { return iterated_residue(f); }

ResidueForm with_numerator(const ResidueForm& f, const LaurentPolynomial& numerator) {
  return ResidueForm(f.scalar(), numerator, f.factors(), f.residue_vars(), false);
}

}  // namespace

TEST_CASE("residue at zero examples") {
  CHECK(value(residue_at_zero(form("1", {"z1/t1"}), 0)) == poly(zt(), "1"));
  CHECK(value(residue_at_zero(form("z1", {"z1/t1", "z1/t2"}), 0)).is_zero());
  CHECK(value(residue_at_zero(form("1/z1", {"z1/t1"}), 0)) == poly(zt(), "1/t1"));
}

TEST_CASE("residue at infinity examples") {
  CHECK(value(residue_at_infinity(form("z1^2", {"z1/t1", "z1/t2"}), 0)) == poly(zt(), "-t1*t2"));
  CHECK(value(residue_at_infinity(form("1", {"z1/t1"}), 0)).is_zero());
  CHECK(value(residue_at_infinity(form("1/z1", {"z1/t1"}), 0)).is_zero());
}

TEST_CASE("malformed forms are rejected") {
  const auto table = VariableTable::standard(2, 1);
  CharacterList mixed(table, {poly(table, "z1*z2").terms()[0].monomial});
  CHECK_THROWS_AS(ResidueForm(1, poly(table, "1"), mixed, {0, 1}), InvalidArgument);
  CharacterList negative(table, {poly(table, "t1/z1").terms()[0].monomial});
  CHECK_THROWS_AS(ResidueForm(1, poly(table, "1"), negative, {0, 1}), InvalidArgument);
}

TEST_CASE("iterated residue examples") {
  const auto gr12 = SpaceDescriptor::grassmannian(1, 2);
  const auto table = gr12.table();
  CHECK(iterated_residue(build_integrand(gr12, poly(table, "1/z1"))) == poly(table, "1/t1 + 1/t2"));
  CHECK(iterated_residue(build_integrand(gr12, poly(table, "z1"))).is_zero());
  const auto gr24 = SpaceDescriptor::grassmannian(2, 4);
  const auto f = poly(gr24.table(), "1/(z1*z2) + z1/z2 + z2/z1");
  const auto integrand = build_integrand(gr24, f);
  const std::vector<Var> forward{0, 1};
  const std::vector<Var> backward{1, 0};
  CHECK(iterated_residue(integrand, forward) == iterated_residue(integrand, backward));
}

TEST_CASE("property: residue theorem on projective-space integrands") {
  RandomSource rng(301);
  for (int n = 2; n <= 5; ++n) {
    const auto space = SpaceDescriptor::grassmannian(1, n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = random_admissible(rng, space);
      const auto integrand = build_integrand(space, f);
      CHECK(iterated_residue(integrand) == testing::finite_pole_sum(integrand));
    }
  }
}

TEST_CASE("property: order independence") {
  RandomSource rng(302);
  for (int r = 2; r <= 3; ++r) {
    const auto table = VariableTable::standard(static_cast<std::size_t>(r), 3);
    for (int trial = 0; trial < 30; ++trial) {
      const auto f = testing::random_form(rng, table, r, rng.coin());
      std::vector<Var> order(static_cast<std::size_t>(r));
      std::iota(order.begin(), order.end(), Var{0});
      const auto reference = iterated_residue(f, order);
      while (std::next_permutation(order.begin(), order.end())) CHECK(iterated_residue(f, order) == reference);
    }
  }
}

TEST_CASE("property: linearity") {
  RandomSource rng(303);
  const auto table = VariableTable::standard(2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = testing::random_form(rng, table, 2);
    const auto g = with_numerator(f, testing::random_form(rng, table, 2).numerator());
    const auto sum = with_numerator(f, f.numerator() + g.numerator());
    CHECK(iterated_residue(sum) == iterated_residue(f) + iterated_residue(g));
    const Rational c(rng.uniform(-5, 5));
    CHECK(iterated_residue(with_numerator(f, c * f.numerator())) == c * iterated_residue(f));
  }
}

TEST_CASE("property: no pole at zero means no residue at zero") {
  RandomSource rng(304);
  const auto table = VariableTable::standard(2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const bool dlog = rng.coin();
    auto f = testing::random_form(rng, table, 2);
    // Shift the numerator so the integrand is regular at z1 = 0. numerator()
    // includes the measure; a dlog form needs one more power of z1.
    const Var z = 0;
    const int low = f.numerator().degree_range(z).first;
    const auto shifted = f.numerator() * Monomial::of(z, (dlog ? 1 : 0) - low);
    f = ResidueForm(f.scalar(), shifted, f.factors(), f.residue_vars(), dlog);
    CHECK(residue_at_zero(f, z).numerator().is_zero());
  }
}
