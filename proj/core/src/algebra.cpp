#include "kpush/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace kpush {

// ---------------------------------------------------------------------------
// VariableTable

VariableTable::VariableTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.size() > kMaxVariables) {
    throw InvalidArgument("variable table exceeds " + std::to_string(kMaxVariables) + " variables");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name.empty()) throw InvalidArgument("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[i].name == entries_[j].name) {
        throw InvalidArgument("duplicate variable name '" + entries_[i].name + "'");
      }
    }
  }
}

std::shared_ptr<const VariableTable> VariableTable::create(std::vector<Entry> entries) {
  return std::make_shared<const VariableTable>(std::move(entries));
}

std::shared_ptr<const VariableTable> VariableTable::standard(std::size_t residue_count,
                                                             std::size_t parameter_count) {
  std::vector<Entry> entries;
  for (std::size_t i = 1; i <= residue_count; ++i) {
    entries.push_back({"z" + std::to_string(i), VarClass::residue});
  }
  for (std::size_t i = 1; i <= parameter_count; ++i) {
    entries.push_back({"t" + std::to_string(i), VarClass::parameter});
  }
  return create(std::move(entries));
}

std::optional<Var> VariableTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

Var VariableTable::at(std::string_view name) const {
  auto v = find(name);
  if (!v) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
  return *v;
}

std::vector<Var> VariableTable::variables_of(VarClass cls) const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].cls == cls) out.push_back(static_cast<Var>(i));
  }
  return out;
}

bool VariableTable::operator==(const VariableTable& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name != other.entries_[i].name || entries_[i].cls != other.entries_[i].cls) {
      return false;
    }
  }
  return true;
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

std::int16_t narrow_exponent(long e) {
  if (e < std::numeric_limits<std::int16_t>::min() || e > std::numeric_limits<std::int16_t>::max()) {
    throw InvalidArgument("exponent overflow");
  }
  return static_cast<std::int16_t>(e);
}

}  // namespace

Monomial Monomial::of(Var v, int exponent) {
  Monomial m;
  m.set(v, exponent);
  return m;
}

void Monomial::set(Var v, int exponent) {
  if (v >= kMaxVariables) throw InvalidArgument("variable index out of range");
  exp_[v] = narrow_exponent(exponent);
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::int16_t e) { return e == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp_) d += e;
  return d;
}

std::vector<Var> Monomial::support() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] != 0) out.push_back(static_cast<Var>(i));
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp_[i] = narrow_exponent(-long{exp_[i]});
  return m;
}

Monomial Monomial::pow(int k) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp_[i] = narrow_exponent(long{exp_[i]} * k);
  return m;
}

Monomial Monomial::without(Var v) const {
  Monomial m = *this;
  m.exp_[v] = 0;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    exp_[i] = narrow_exponent(long{exp_[i]} + other.exp_[i]);
  }
  return *this;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ull;
  }
  return h;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    const bool sa = a.exponent(static_cast<Var>(i)) != 0;
    const bool sb = b.exponent(static_cast<Var>(i)) != 0;
    if (sa != sb) return sb;
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const int ea = a.exponent(static_cast<Var>(i));
    const int eb = b.exponent(static_cast<Var>(i));
    if (ea == eb) continue;
    const int ma = std::abs(ea), mb = std::abs(eb);
    if (ma != mb) return ma < mb;
    return ea > 0;
  }
  return false;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const int ea = a.exponent(static_cast<Var>(i));
    const int eb = b.exponent(static_cast<Var>(i));
    if (ea != eb) return ea < eb;
  }
  return false;
}

std::string to_string(const Monomial& m, const VariableTable& table) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const int e = m.exponent(static_cast<Var>(i));
    if (e == 0) continue;
    if (i >= table.size()) throw InvariantViolation("monomial uses a variable outside its table");
    if (!out.empty()) out += '*';
    out += table.name(static_cast<Var>(i));
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

namespace {

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return canonical_less(a.monomial, b.monomial); }
};

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), TermLess{});
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) {
      c += terms[j].coeff;
      ++j;
    }
    if (c != 0) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw InvalidArgument("polynomial needs a variable table");
}

LaurentPolynomial LaurentPolynomial::constant(TablePtr table, const Rational& c) {
  return monomial(std::move(table), Monomial{}, c);
}

LaurentPolynomial LaurentPolynomial::monomial(TablePtr table, const Monomial& m, const Rational& c) {
  LaurentPolynomial p(std::move(table));
  for (Var v : m.support()) {
    if (v >= p.table_->size()) throw InvalidArgument("monomial uses a variable outside the table");
  }
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(TablePtr table, std::string_view name, int exponent) {
  const Var v = table->at(name);
  return monomial(std::move(table), Monomial::of(v, exponent));
}

LaurentPolynomial LaurentPolynomial::from_terms(TablePtr table, std::vector<Term> terms) {
  LaurentPolynomial p(std::move(table));
  for (const auto& t : terms) {
    for (Var v : t.monomial.support()) {
      if (v >= p.table_->size()) throw InvalidArgument("monomial uses a variable outside the table");
    }
  }
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPolynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff.get_den() == 1; });
}

std::optional<Rational> LaurentPolynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].monomial.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

Rational LaurentPolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, TermLess{});
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

bool LaurentPolynomial::involves(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.monomial.involves(v); });
}

std::pair<int, int> LaurentPolynomial::degree_range(Var v) const {
  if (terms_.empty()) throw InvalidArgument("degree of the zero polynomial");
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& t : terms_) {
    lo = std::min(lo, t.monomial.exponent(v));
    hi = std::max(hi, t.monomial.exponent(v));
  }
  return {lo, hi};
}

std::map<int, LaurentPolynomial> LaurentPolynomial::split_by(Var v) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    buckets[t.monomial.exponent(v)].push_back({t.monomial.without(v), t.coeff});
  }
  std::map<int, LaurentPolynomial> out;
  for (auto& [e, terms] : buckets) {
    // Removing one variable keeps the canonical order within a bucket only up
    // to ties, so re-sort.
    out.emplace(e, from_terms(table_, std::move(terms)));
  }
  return out;
}

Monomial LaurentPolynomial::min_exponents() const {
  Monomial m;
  if (terms_.empty()) return m;
  for (std::size_t i = 0; i < table_->size(); ++i) {
    const Var v = static_cast<Var>(i);
    int lo = terms_[0].monomial.exponent(v);
    for (const auto& t : terms_) lo = std::min(lo, t.monomial.exponent(v));
    m.set(v, lo);
  }
  return m;
}

void LaurentPolynomial::require_same_table(const LaurentPolynomial& other) const {
  if (!same_table(table_, other.table_)) {
    throw MixedTablesError("operands use different variable tables");
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  require_same_table(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = other.terms_.begin(), be = other.terms_.end();
  while (a != ae && b != be) {
    if (canonical_less(a->monomial, b->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (canonical_less(b->monomial, a->monomial)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) merged.push_back(std::move(*a));
  for (; b != be; ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += -other;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_same_table(b);
  LaurentPolynomial out(a.table_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    out.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) out.terms_.push_back({t.monomial * single.monomial, t.coeff * single.coeff});
    // Multiplying by a monomial is not order preserving in the canonical order.
    std::sort(out.terms_.begin(), out.terms_.end(), TermLess{});
    return out;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(x.monomial * y.monomial, prod);
      if (!inserted) it->second += prod;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), TermLess{});
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Monomial& m) {
  for (Var v : m.support()) {
    if (v >= table_->size()) throw InvalidArgument("monomial uses a variable outside the table");
  }
  for (auto& t : terms_) t.monomial *= m;
  std::sort(terms_.begin(), terms_.end(), TermLess{});
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1) throw InvalidArgument("negative power of a non-monomial");
    Rational c = 1 / terms_[0].coeff;
    return monomial(table_, terms_[0].monomial.inverse(), c).pow(-k);
  }
  LaurentPolynomial result = constant(table_, 1);
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const {
  if (!same_table(table_, other.table_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += kpush::to_string(t.monomial, *table_);
    }
  }
  return out;
}

bool canonical_less(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto ta = a.terms(), tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (canonical_less(ta[i].monomial, tb[i].monomial)) return true;
    if (canonical_less(tb[i].monomial, ta[i].monomial)) return false;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

LaurentPolynomial rebase(const LaurentPolynomial& p, const TablePtr& target) {
  if (same_table(p.table(), target)) return LaurentPolynomial::from_terms(target, {p.terms().begin(), p.terms().end()});
  return substitute_monomials(p, MonomialMap::identity(p.table(), target));
}

// ---------------------------------------------------------------------------
// Substitutions

MonomialMap::MonomialMap(TablePtr source, TablePtr target)
    : source_(std::move(source)), target_(std::move(target)), images_(source_->size()) {}

MonomialMap MonomialMap::identity(TablePtr source, TablePtr target) {
  MonomialMap map(source, target);
  for (std::size_t i = 0; i < source->size(); ++i) {
    if (auto v = target->find(source->name(static_cast<Var>(i)))) {
      map.images_[i] = Monomial::of(*v);
    }
  }
  return map;
}

MonomialMap& MonomialMap::set(Var source_var, const Monomial& image) {
  if (source_var >= source_->size()) throw InvalidArgument("substitution source variable out of range");
  for (Var v : image.support()) {
    if (v >= target_->size()) throw InvalidArgument("substitution image outside the target table");
  }
  images_[source_var] = image;
  return *this;
}

MonomialMap& MonomialMap::set(std::string_view source_name, const Monomial& image) {
  return set(source_->at(source_name), image);
}

Monomial MonomialMap::apply(const Monomial& m) const {
  Monomial out;
  for (Var v : m.support()) {
    const auto& img = images_.at(v);
    if (!img) {
      throw InvalidArgument("substitution has no image for variable '" + source_->name(v) + "'");
    }
    out *= img->pow(m.exponent(v));
  }
  return out;
}

LaurentPolynomial MonomialMap::apply(const LaurentPolynomial& p) const {
  if (!same_table(p.table(), source_)) throw MixedTablesError("substitution source table mismatch");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({apply(t.monomial), t.coeff});
  return LaurentPolynomial::from_terms(target_, std::move(terms));
}

MonomialMap MonomialMap::after(const MonomialMap& first) const {
  if (!same_table(first.target_, source_)) throw MixedTablesError("cannot compose substitutions");
  MonomialMap out(first.source_, target_);
  for (std::size_t i = 0; i < first.images_.size(); ++i) {
    if (first.images_[i]) out.images_[i] = apply(*first.images_[i]);
  }
  return out;
}

LaurentPolynomial substitute_monomials(const LaurentPolynomial& p, const MonomialMap& map) {
  return map.apply(p);
}

PolynomialAssignment::PolynomialAssignment(TablePtr source, TablePtr target)
    : source_(std::move(source)), target_(std::move(target)), images_(source_->size()) {}

PolynomialAssignment& PolynomialAssignment::set(std::string_view source_name, LaurentPolynomial image) {
  return set(source_->at(source_name), std::move(image));
}

PolynomialAssignment& PolynomialAssignment::set(Var source_var, LaurentPolynomial image) {
  if (!same_table(image.table(), target_)) throw MixedTablesError("assignment image uses a foreign table");
  images_.at(source_var) = std::move(image);
  return *this;
}

LaurentPolynomial compose(const LaurentPolynomial& q, const PolynomialAssignment& assignment) {
  if (!same_table(q.table(), assignment.source())) throw MixedTablesError("compose source table mismatch");
  const auto& target = assignment.target();
  // Cache powers per variable; exponents in q are small.
  std::vector<std::map<int, LaurentPolynomial>> powers(q.table()->size());
  auto power_of = [&](Var v, int e) -> const LaurentPolynomial& {
    auto& cache = powers[v];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    const auto& img = assignment.image(v);
    if (!img) throw InvalidArgument("compose has no image for symbol '" + q.table()->name(v) + "'");
    return cache.emplace(e, img->pow(e)).first->second;
  };
  LaurentPolynomial out(target);
  for (const auto& t : q.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(target, t.coeff);
    for (Var v : t.monomial.support()) term *= power_of(v, t.monomial.exponent(v));
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact division

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (d.exponent(static_cast<Var>(i)) > m.exponent(static_cast<Var>(i))) return false;
  }
  return true;
}

}  // namespace

std::optional<LaurentPolynomial> try_exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& d) {
  if (!same_table(p.table(), d.table())) throw MixedTablesError("operands use different variable tables");
  if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const auto& table = p.table();
  if (p.is_zero()) return LaurentPolynomial(table);
  if (d.is_monomial()) {
    const auto& t = d.terms()[0];
    LaurentPolynomial q = p;
    q *= Rational(1 / t.coeff);
    q *= t.monomial.inverse();
    return q;
  }

  // Shift both operands to ordinary polynomials with no monomial content,
  // then run the division algorithm under graded lex.
  const Monomial p_shift = p.min_exponents().inverse();
  const Monomial d_shift = d.min_exponents().inverse();

  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.monomial * p_shift, t.coeff);
  std::vector<Term> divisor;
  divisor.reserve(d.size());
  for (const auto& t : d.terms()) divisor.push_back({t.monomial * d_shift, t.coeff});
  auto lead = std::min_element(divisor.begin(), divisor.end(), [](const Term& a, const Term& b) {
    return grlex_less(b.monomial, a.monomial);
  });
  const Monomial lead_m = lead->monomial;
  const Rational lead_c = lead->coeff;

  std::vector<Term> quotient;
  Rational qc, prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!divides(lead_m, top->first)) return std::nullopt;
    const Monomial qm = top->first / lead_m;
    qc = top->second / lead_c;
    for (const auto& t : divisor) {
      mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), t.coeff.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(t.monomial * qm, -prod);
      if (!inserted) {
        it->second -= prod;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.push_back({qm, qc});
  }
  // p' = q' d'  =>  p = q' * d_shift^{-1}... shifted back by p_shift^{-1} * d_shift.
  const Monomial back = p_shift.inverse() * d_shift;
  for (auto& t : quotient) t.monomial *= back;
  return LaurentPolynomial::from_terms(table, std::move(quotient));
}

LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& d) {
  auto q = try_exact_divide(p, d);
  if (!q) throw NotDivisible("(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
  return *std::move(q);
}

// ---------------------------------------------------------------------------
// Rational expressions

RationalExpression::RationalExpression(LaurentPolynomial num, LaurentPolynomial den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (!same_table(numerator.table(), denominator.table())) {
    throw MixedTablesError("rational expression over mixed tables");
  }
  if (denominator.is_zero()) throw InvalidArgument("rational expression with zero denominator");
}

bool RationalExpression::equals(const RationalExpression& other) const {
  return numerator * other.denominator == other.numerator * denominator;
}

namespace {

// f = unit * normalized, where normalized has componentwise-minimal exponents
// zero and a leading (grlex) coefficient of one.
struct NormalizedFactor {
  LaurentPolynomial normalized;
  Monomial unit_monomial;
  Rational unit_coeff;
};

NormalizedFactor normalize_factor(const LaurentPolynomial& f) {
  if (f.is_zero()) throw InvalidArgument("zero factor in a denominator");
  const Monomial shift = f.min_exponents();
  const auto terms = f.terms();
  const Term* lead = &terms[0];
  for (const auto& t : terms) {
    if (grlex_less(lead->monomial, t.monomial)) lead = &t;
  }
  Rational c = lead->coeff;
  LaurentPolynomial g = f;
  g *= shift.inverse();
  g *= Rational(1 / c);
  return {std::move(g), shift, c};
}

struct PolyKeyLess {
  bool operator()(const LaurentPolynomial& a, const LaurentPolynomial& b) const {
    return canonical_less(a, b);
  }
};

}  // namespace

CommonDenominator::CommonDenominator(TablePtr table,
                                     const std::vector<std::vector<LaurentPolynomial>>& factor_lists)
    : table_(std::move(table)) {
  std::map<LaurentPolynomial, std::size_t, PolyKeyLess> index;
  std::vector<std::vector<int>> counts;
  std::vector<LaurentPolynomial> units;
  for (const auto& factors : factor_lists) {
    LaurentPolynomial unit = LaurentPolynomial::constant(table_, 1);
    std::vector<int> count;
    for (const auto& f : factors) {
      if (!same_table(f.table(), table_)) throw MixedTablesError("denominator factor over a foreign table");
      auto nf = normalize_factor(f);
      unit *= Rational(1 / nf.unit_coeff);
      unit *= nf.unit_monomial.inverse();
      auto [it, inserted] = index.try_emplace(nf.normalized, distinct_.size());
      if (inserted) distinct_.push_back(std::move(nf.normalized));
      if (count.size() <= it->second) count.resize(it->second + 1, 0);
      ++count[it->second];
    }
    counts.push_back(std::move(count));
    units.push_back(std::move(unit));
  }
  multiplicity_.assign(distinct_.size(), 0);
  for (auto& c : counts) {
    c.resize(distinct_.size(), 0);
    for (std::size_t i = 0; i < distinct_.size(); ++i) multiplicity_[i] = std::max(multiplicity_[i], c[i]);
  }
  cofactors_.reserve(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    LaurentPolynomial cofactor = std::move(units[k]);
    for (std::size_t i = 0; i < distinct_.size(); ++i) {
      for (int e = counts[k][i]; e < multiplicity_[i]; ++e) cofactor *= distinct_[i];
    }
    cofactors_.push_back(std::move(cofactor));
  }
}

LaurentPolynomial CommonDenominator::lift(std::size_t i, const LaurentPolynomial& numerator) const {
  if (!same_table(numerator.table(), table_)) throw MixedTablesError("numerator over a foreign table");
  return numerator * cofactors_.at(i);
}

LaurentPolynomial CommonDenominator::reduce(LaurentPolynomial total) const {
  for (std::size_t i = 0; i < distinct_.size(); ++i) {
    for (int k = 0; k < multiplicity_[i]; ++k) {
      if (total.is_zero()) return total;
      auto q = try_exact_divide(total, distinct_[i]);
      if (!q) throw NotPolynomial("rational sum does not simplify to a Laurent polynomial");
      total = *std::move(q);
    }
  }
  return total;
}

LaurentPolynomial CommonDenominator::sum(std::span<const LaurentPolynomial> numerators) const {
  if (numerators.size() != cofactors_.size()) throw InvalidArgument("numerator count mismatch");
  LaurentPolynomial total(table_);
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    if (!numerators[i].is_zero()) total += lift(i, numerators[i]);
  }
  return reduce(std::move(total));
}

LaurentPolynomial rational_sum_to_polynomial(std::span<const FactoredFraction> terms) {
  if (terms.empty()) throw InvalidArgument("empty rational sum");
  const auto table = terms[0].numerator.table();
  std::vector<std::vector<LaurentPolynomial>> factor_lists;
  std::vector<LaurentPolynomial> numerators;
  for (const auto& term : terms) {
    if (!same_table(term.numerator.table(), table)) throw MixedTablesError("rational sum over mixed tables");
    factor_lists.push_back(term.factors);
    numerators.push_back(term.numerator);
  }
  return CommonDenominator(table, factor_lists).sum(numerators);
}

LaurentPolynomial rational_sum_to_polynomial(std::span<const RationalExpression> terms) {
  std::vector<FactoredFraction> factored;
  factored.reserve(terms.size());
  for (const auto& t : terms) factored.push_back({t.numerator, {t.denominator}});
  return rational_sum_to_polynomial(std::span<const FactoredFraction>(factored));
}

}  // namespace kpush
