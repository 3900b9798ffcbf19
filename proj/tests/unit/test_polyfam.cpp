#include "printing.hpp"

#include "kpush/polyfam.hpp"
#include "kpush/spaces.hpp"
#include "support.hpp"

using namespace kpush;
using kpush::testing::poly;

namespace {

const TablePtr& zt() {
  static const TablePtr table = VariableTable::standard(2, 0);
  return table;
}

TablePtr x_table(int n) {
  std::vector<VariableTable::Entry> entries;
  for (int i = 1; i <= n; ++i) entries.push_back({"x" + std::to_string(i), VarClass::residue});
  return VariableTable::create(std::move(entries));
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  // Weakly decreasing sequences, enumerated by odometer.
  while (true) {
    std::vector<int> trimmed;
    for (int p : parts) {
      if (p > 0) trimmed.push_back(p);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < parts.size(); ++i) decreasing = decreasing && parts[i - 1] >= parts[i];
    if (decreasing) out.emplace_back(trimmed);
    std::size_t i = 0;
    while (i < parts.size() && parts[i] == cols) parts[i++] = 0;
    if (i == parts.size()) break;
    ++parts[i];
  }
  return out;
}

}  // namespace

TEST_CASE("partition rendering and parsing") {
  CHECK(Partition{4, 1}.to_string() == "[41]");
  CHECK(Partition{}.to_string() == "[0]");
  CHECK(Partition{4}.to_string() == "[4]");
  CHECK(Partition::parse("[40]") == Partition{4});
  CHECK(Partition::parse("[0]") == Partition{});
  CHECK(Partition{12, 3}.to_string() == "[12,3]");
  CHECK(Partition::parse("[12,3]") == Partition{12, 3});
}

TEST_CASE("schur examples") {
  const auto x = schur_table();
  CHECK(schur_pair(1, 0) == poly(x, "x1 + x2"));
  CHECK(schur_pair(1, 1) == poly(x, "x1*x2"));
  CHECK(schur_pair(2, 1) == poly(x, "x1^2*x2 + x1*x2^2"));
}

TEST_CASE("grothendieck pair matches the printed expansions") {
  const auto z = zt();
  CHECK(grothendieck_pair(0, 0, z) == poly(z, "1"));
  CHECK(grothendieck_pair(1, 0, z) == poly(z, "1 - z1*z2"));
  CHECK(grothendieck_pair(2, 0, z) == poly(z, "z2*z1^2 + z2^2*z1 - 3*z2*z1 + 1"));
  CHECK(grothendieck_pair(1, 1, z) == poly(z, "(1 - z1)*(1 - z2)"));
  CHECK(grothendieck_pair(3, 0, z) ==
        poly(z, "-z2*z1^3 - z2^2*z1^2 + 4*z2*z1^2 - z2^3*z1 + 4*z2^2*z1 - 6*z2*z1 + 1"));
  CHECK(grothendieck_pair(2, 1, z) == poly(z, "(1 - z1)*(1 - z2)*(1 - z1*z2)"));
  CHECK(grothendieck_pair(4, 0, z) ==
        poly(z, "z2*z1^4 + z2^2*z1^3 - 5*z2*z1^3 + z2^3*z1^2 - 5*z2^2*z1^2 + 10*z2*z1^2 + z2^4*z1 - "
                "5*z2^3*z1 + 10*z2^2*z1 - 10*z2*z1 + 1"));
  CHECK(grothendieck_pair(3, 1, z) == poly(z, "(1 - z1)*(1 - z2)*(z2*z1^2 + z2^2*z1 - 3*z2*z1 + 1)"));
  CHECK(grothendieck_pair(2, 2, z) == poly(z, "(1 - z1)^2*(1 - z2)^2"));
}

TEST_CASE("property: schur pair agrees with tableaux enumeration") {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= a; ++b) CHECK(schur_pair(a, b) == testing::schur_from_tableaux(a, b, schur_table()));
  }
}

TEST_CASE("property: two-variable classes are symmetric") {
  const auto z = zt();
  MonomialMap swap(z, z);
  swap.set("z1", Monomial::of(1)).set("z2", Monomial::of(0));
  MonomialMap swap_x(schur_table(), schur_table());
  swap_x.set("x1", Monomial::of(1)).set("x2", Monomial::of(0));
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= a; ++b) {
      const auto g = grothendieck_pair(a, b, z);
      CHECK(swap.apply(g) == g);
      const auto s = schur_pair(a, b);
      CHECK(swap_x.apply(s) == s);
    }
  }
}

TEST_CASE("property: Grothendieck classes vanish at the identity except G0") {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= a; ++b) CHECK(testing::at_one(grothendieck_pair(a, b, zt())) == (a == 0 ? 1 : 0));
  }
}

TEST_CASE("grothendieck general examples") {
  for (int n = 1; n <= 4; ++n) CHECK(grothendieck_general(Partition{}, n, testing::t_table(n)) == poly(testing::t_table(n), "1"));
  const auto t1 = testing::t_table(1);
  for (int a = 0; a <= 4; ++a) {
    CHECK(grothendieck_general(Partition{a}, 1, t1) == poly(t1, "1 - 1/t1").pow(a));
  }
  const auto t2 = testing::t_table(2);
  const auto g = grothendieck_general(Partition{1}, 2, t2);
  MonomialMap swap(t2, t2);
  swap.set("t1", Monomial::of(1)).set("t2", Monomial::of(0));
  CHECK(swap.apply(g) == g);
  CHECK_THROWS_AS(grothendieck_general(Partition{1, 1, 1}, 2, t2), InvalidArgument);
}

TEST_CASE("property: divided differences agree with the bialternant formula") {
  for (int n = 1; n <= 3; ++n) {
    const auto x = x_table(n);
    for (const auto& a : partitions_in_box(n, 3)) {
      CAPTURE(a.to_string());
      CHECK(grothendieck_in_x(a, n, x) == testing::grothendieck_bialternant(a, n, x));
    }
  }
}

TEST_CASE("rectangle partitions") {
  const auto box = rectangle_partitions(2, 5);
  CHECK(box.size() == 21);
  std::string listing;
  for (const auto& p : box) listing += p.to_string() + " ";
  CHECK(listing == "[0] [1] [2] [11] [3] [21] [4] [31] [22] [5] [41] [32] [33] [42] [51] [43] [52] [44] [53] [54] [55] ");
  CHECK(complement(Partition{5, 5}, 2, 5) == Partition{});
  CHECK(complement(Partition{4, 1}, 2, 5) == Partition{4, 1});
  CHECK(rectangle_partitions(3, 3).size() == 20);
}

TEST_CASE("property: complement is an involution") {
  for (int rows = 1; rows <= 3; ++rows) {
    for (int cols = 1; cols <= 5; ++cols) {
      const auto box = rectangle_partitions(rows, cols);
      CHECK(box.size() == partitions_in_box(rows, cols).size());
      for (const auto& j : box) {
        const auto c = complement(j, rows, cols);
        CHECK(c.fits(rows, cols));
        CHECK(c.size() + j.size() == rows * cols);
        CHECK(complement(c, rows, cols) == j);
      }
    }
  }
}
