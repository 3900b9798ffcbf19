#include "kpush/polyfam.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace kpush {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidArgument("partition parts must be nonnegative");
    if (i && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw InvalidArgument("partition must look like [41]: '" + std::string(s) + "'");
  }
  const std::string_view body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (body.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const std::size_t next = std::min(body.find(',', pos), body.size());
      const std::string_view item = body.substr(pos, next - pos);
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw InvalidArgument("bad partition '" + std::string(s) + "'");
      }
      parts.push_back(std::stoi(std::string(item)));
      pos = next + 1;
    }
  } else {
    if (body.empty()) throw InvalidArgument("bad partition '" + std::string(s) + "'");
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument("bad partition '" + std::string(s) + "'");
      parts.push_back(c - '0');
    }
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "[0]";
  const bool wide = std::any_of(parts_.begin(), parts_.end(), [](int p) { return p > 9; });
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (int i = 0; i < length(); ++i) {
    if (parts_[i] > other.parts_[i]) return false;
  }
  return true;
}

std::vector<Partition> rectangle_partitions(int rows, int cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("rectangle dimensions must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int row, int max_part) {
    out.emplace_back(current);
    if (row == rows) return;
    for (int p = 1; p <= max_part; ++p) {
      current.push_back(p);
      build(row + 1, p);
      current.pop_back();
    }
  };
  build(0, cols);
  std::sort(out.begin(), out.end(), [cols](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.size() <= cols ? b.parts() < a.parts() : a.parts() < b.parts();
  });
  return out;
}

Partition complement(const Partition& j, int rows, int cols) {
  if (!j.fits(rows, cols)) throw InvalidArgument("partition " + j.to_string() + " does not fit the rectangle");
  std::vector<int> parts(rows);
  for (int i = 0; i < rows; ++i) parts[i] = cols - j.part(rows - 1 - i);
  return Partition(std::move(parts));
}

TablePtr schur_table() {
  static const TablePtr table =
      VariableTable::create({{"x1", VarClass::residue}, {"x2", VarClass::residue}});
  return table;
}

LaurentPolynomial schur_pair(int a, int b, const TablePtr& table) {
  if (b < 0 || a < b) throw InvalidArgument("schur_pair needs a >= b >= 0");
  const Var x1 = table->at("x1"), x2 = table->at("x2");
  Monomial m1, m2;
  m1.set(x1, a + 1);
  m1.set(x2, b);
  m2.set(x2, a + 1);
  m2.set(x1, b);
  const auto num = LaurentPolynomial::monomial(table, m1) - LaurentPolynomial::monomial(table, m2);
  const auto den = LaurentPolynomial::monomial(table, Monomial::of(x1)) - LaurentPolynomial::monomial(table, Monomial::of(x2));
  return exact_divide(num, den);
}

LaurentPolynomial schur_pair(const Partition& p, const TablePtr& table) {
  if (p.length() > 2) throw InvalidArgument("schur_pair needs at most two parts");
  return schur_pair(p.part(0), p.part(1), table);
}

LaurentPolynomial grothendieck_pair(int a, int b, const TablePtr& table) {
  if (b < 0 || a < b) throw InvalidArgument("grothendieck_pair needs a >= b >= 0");
  const Var z1 = table->at("z1"), z2 = table->at("z2");
  const auto one = LaurentPolynomial::constant(table, 1);
  const auto u1 = one - LaurentPolynomial::monomial(table, Monomial::of(z1));
  const auto u2 = one - LaurentPolynomial::monomial(table, Monomial::of(z2));
  const auto r12 = one - LaurentPolynomial::monomial(table, Monomial::of(z1) / Monomial::of(z2));
  const auto r21 = one - LaurentPolynomial::monomial(table, Monomial::of(z2) / Monomial::of(z1));
  const std::vector<RationalExpression> terms{
      RationalExpression(u1.pow(a + 1) * u2.pow(b), r12),
      RationalExpression(u2.pow(a + 1) * u1.pow(b), r21),
  };
  return rational_sum_to_polynomial(std::span<const RationalExpression>(terms));
}

LaurentPolynomial grothendieck_pair(const Partition& p, const TablePtr& table) {
  if (p.length() > 2) throw InvalidArgument("grothendieck_pair needs at most two parts");
  return grothendieck_pair(p.part(0), p.part(1), table);
}

namespace {

// pi_i f = ((1 - x_{i+1}) f - s_i((1 - x_{i+1}) f)) / (x_i - x_{i+1}), 0-based i.
LaurentPolynomial isobaric_difference(const LaurentPolynomial& f, int i, const TablePtr& table) {
  const Var a = static_cast<Var>(i), b = static_cast<Var>(i + 1);
  const auto xa = LaurentPolynomial::monomial(table, Monomial::of(a));
  const auto xb = LaurentPolynomial::monomial(table, Monomial::of(b));
  const auto g = (LaurentPolynomial::constant(table, 1) - xb) * f;
  MonomialMap swap = MonomialMap::identity(table, table);
  swap.set(a, Monomial::of(b));
  swap.set(b, Monomial::of(a));
  return exact_divide(g - swap.apply(g), xa - xb);
}

}  // namespace

LaurentPolynomial grothendieck_in_x(const Partition& a, int n, const TablePtr& x_table) {
  if (n < 1) throw InvalidArgument("grothendieck_general needs n >= 1");
  if (a.length() > n) throw InvalidArgument("partition " + a.to_string() + " is longer than n");
  if (x_table->size() < static_cast<std::size_t>(n)) throw InvalidArgument("table too small");
  Monomial top;
  for (int i = 0; i < n; ++i) top.set(static_cast<Var>(i), a.part(i) + n - 1 - i);
  LaurentPolynomial f = LaurentPolynomial::monomial(x_table, top);
  // Reduced word s1 (s2 s1) (s3 s2 s1) ... of the longest permutation.
  for (int k = 0; k + 1 < n; ++k) {
    for (int i = k; i >= 0; --i) f = isobaric_difference(f, i, x_table);
  }
  return f;
}

LaurentPolynomial grothendieck_general(const Partition& a, int n, const TablePtr& table) {
  std::vector<VariableTable::Entry> entries;
  for (int i = 1; i <= n; ++i) entries.push_back({"x" + std::to_string(i), VarClass::residue});
  const auto x_table = VariableTable::create(std::move(entries));
  const auto gx = grothendieck_in_x(a, n, x_table);
  PolynomialAssignment assign(x_table, table);
  const auto one = LaurentPolynomial::constant(table, 1);
  for (int i = 1; i <= n; ++i) {
    assign.set(static_cast<Var>(i - 1), one - LaurentPolynomial::variable(table, "t" + std::to_string(i), -1));
  }
  return compose(gx, assign);
}

}  // namespace kpush
