#pragma once

// Exact multivariate Laurent polynomials with arbitrary-precision rational
// coefficients. Every other part of the library is built on these types.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "kpush/errors.hpp"

namespace kpush {

using Rational = mpq_class;
using Var = std::uint16_t;

inline constexpr std::size_t kMaxVariables = 32;

enum class VarClass { residue, parameter };

// Ordered universe of variable symbols. The order is fixed for the lifetime of
// the table and determines rendering, serialization and default residue order.
class VariableTable {
 public:
  struct Entry {
    std::string name;
    VarClass cls = VarClass::parameter;
  };

  explicit VariableTable(std::vector<Entry> entries);

  static std::shared_ptr<const VariableTable> create(std::vector<Entry> entries);

  // z1..z{residue_count} followed by t1..t{parameter_count}.
  static std::shared_ptr<const VariableTable> standard(std::size_t residue_count,
                                                       std::size_t parameter_count);

  std::size_t size() const { return entries_.size(); }
  const std::string& name(Var v) const { return entries_.at(v).name; }
  VarClass var_class(Var v) const { return entries_.at(v).cls; }
  std::optional<Var> find(std::string_view name) const;
  // Throws InvalidArgument when the name is unknown.
  Var at(std::string_view name) const;
  std::vector<Var> variables_of(VarClass cls) const;
  const std::vector<Entry>& entries() const { return entries_; }

  bool operator==(const VariableTable& other) const;

 private:
  std::vector<Entry> entries_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

bool same_table(const TablePtr& a, const TablePtr& b);

// A Laurent monomial: an integer exponent per variable of a table.
// Exponents default to zero; the unit monomial is the default value.
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Var v, int exponent = 1);

  int exponent(Var v) const { return exp_[v]; }
  void set(Var v, int exponent);

  bool is_one() const;
  bool involves(Var v) const { return exp_[v] != 0; }
  int total_degree() const;
  std::vector<Var> support() const;

  Monomial inverse() const;
  Monomial pow(int k) const;
  Monomial without(Var v) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a *= b.inverse(); }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;

 private:
  std::array<std::int16_t, kMaxVariables> exp_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Canonical (display/storage) order: first by the set of variables present,
// read as a binary number with variable i as bit i; then variable by variable
// in table order with exponent key (|e|, e < 0).
bool canonical_less(const Monomial& a, const Monomial& b);

// Graded lexicographic order under the table order (used for exact division).
bool grlex_less(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const VariableTable& table);

struct Term {
  Monomial monomial;
  Rational coeff;
};

class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(TablePtr table);

  static LaurentPolynomial constant(TablePtr table, const Rational& c);
  static LaurentPolynomial monomial(TablePtr table, const Monomial& m, const Rational& c = 1);
  static LaurentPolynomial variable(TablePtr table, std::string_view name, int exponent = 1);
  // Merges duplicate monomials and drops zero coefficients.
  static LaurentPolynomial from_terms(TablePtr table, std::vector<Term> terms);

  const TablePtr& table() const { return table_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Monomial& m) const;

  bool involves(Var v) const;
  // Minimum and maximum exponent of v over all terms. Throws on zero.
  std::pair<int, int> degree_range(Var v) const;
  // Coefficients of each power of v; the map values do not involve v.
  std::map<int, LaurentPolynomial> split_by(Var v) const;
  // Minimum exponent of every variable (componentwise) over all terms.
  Monomial min_exponents() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& c);
  LaurentPolynomial& operator*=(const Monomial& m);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Monomial& m) { return a *= m; }

  // k >= 0, or any k when the polynomial is a single term.
  LaurentPolynomial pow(int k) const;

  bool operator==(const LaurentPolynomial& other) const;

  // Canonical text: terms in canonical order, "^" for exponents, explicit "*".
  std::string to_string() const;

 private:
  void require_same_table(const LaurentPolynomial& other) const;

  TablePtr table_;
  std::vector<Term> terms_;
};

// Total order on polynomials over one table (term-wise canonical comparison).
bool canonical_less(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Moves p onto another table by matching variable names.
LaurentPolynomial rebase(const LaurentPolynomial& p, const TablePtr& target);

// Variable-to-monomial substitution between two tables.
class MonomialMap {
 public:
  MonomialMap(TablePtr source, TablePtr target);

  // Identity on every variable name that exists in both tables.
  static MonomialMap identity(TablePtr source, TablePtr target);

  MonomialMap& set(Var source_var, const Monomial& image);
  MonomialMap& set(std::string_view source_name, const Monomial& image);
  const std::optional<Monomial>& image(Var v) const { return images_.at(v); }

  const TablePtr& source() const { return source_; }
  const TablePtr& target() const { return target_; }

  Monomial apply(const Monomial& m) const;
  // Throws InvalidArgument on an occurring variable that has no image.
  LaurentPolynomial apply(const LaurentPolynomial& p) const;

  // (this after first): x -> this(first(x)).
  MonomialMap after(const MonomialMap& first) const;

 private:
  TablePtr source_;
  TablePtr target_;
  std::vector<std::optional<Monomial>> images_;
};

LaurentPolynomial substitute_monomials(const LaurentPolynomial& p, const MonomialMap& map);

// Polynomial evaluation: each variable of q's table is replaced by a
// Laurent polynomial over `target`. Negative powers require a unit image.
class PolynomialAssignment {
 public:
  PolynomialAssignment(TablePtr source, TablePtr target);
  PolynomialAssignment& set(std::string_view source_name, LaurentPolynomial image);
  PolynomialAssignment& set(Var source_var, LaurentPolynomial image);
  const TablePtr& source() const { return source_; }
  const TablePtr& target() const { return target_; }
  const std::optional<LaurentPolynomial>& image(Var v) const { return images_.at(v); }

 private:
  TablePtr source_;
  TablePtr target_;
  std::vector<std::optional<LaurentPolynomial>> images_;
};

LaurentPolynomial compose(const LaurentPolynomial& q, const PolynomialAssignment& assignment);

// q with q * d == p, or NotDivisible.
LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& d);
std::optional<LaurentPolynomial> try_exact_divide(const LaurentPolynomial& p,
                                                  const LaurentPolynomial& d);

struct RationalExpression {
  LaurentPolynomial numerator;
  LaurentPolynomial denominator;

  RationalExpression(LaurentPolynomial num, LaurentPolynomial den);

  // Equality by cross-multiplication.
  bool equals(const RationalExpression& other) const;
};

// numerator / prod(factors); factors are kept unexpanded so that a common
// denominator can be assembled from shared factors.
struct FactoredFraction {
  LaurentPolynomial numerator;
  std::vector<LaurentPolynomial> factors;
};

// Common denominator of a family of factored denominators. Factors are
// matched up to units (monomials times constants); the common denominator
// takes each distinct factor to its highest multiplicity.
class CommonDenominator {
 public:
  CommonDenominator(TablePtr table, const std::vector<std::vector<LaurentPolynomial>>& factor_lists);

  std::size_t size() const { return cofactors_.size(); }
  // numerator_i / denominator_i rewritten over the common denominator.
  LaurentPolynomial lift(std::size_t i, const LaurentPolynomial& numerator) const;
  // total / common denominator, or NotPolynomial.
  LaurentPolynomial reduce(LaurentPolynomial total) const;
  // sum_i numerators[i] / denominator_i.
  LaurentPolynomial sum(std::span<const LaurentPolynomial> numerators) const;

 private:
  TablePtr table_;
  std::vector<LaurentPolynomial> distinct_;
  std::vector<int> multiplicity_;
  std::vector<LaurentPolynomial> cofactors_;
};

// Sum over a common denominator followed by exact division.
// Throws NotPolynomial when the sum is not a Laurent polynomial.
LaurentPolynomial rational_sum_to_polynomial(std::span<const RationalExpression> terms);
LaurentPolynomial rational_sum_to_polynomial(std::span<const FactoredFraction> terms);

}  // namespace kpush
