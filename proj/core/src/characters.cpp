#include "kpush/characters.hpp"

#include <algorithm>

namespace kpush {

namespace {

void check_entry(const Monomial& m, const VariableTable& table) {
  for (Var v : m.support()) {
    if (v >= table.size()) throw InvalidArgument("character uses a variable outside the table");
  }
}

const CharacterList& require(const CharacterList* p, const char* what) {
  if (!p) throw InvalidArgument(std::string("missing argument: ") + what);
  return *p;
}

void require_same(const CharacterList& a, const CharacterList& b) {
  if (!same_table(a.table(), b.table())) throw MixedTablesError("character lists use different tables");
}

std::string monomial_part(const Monomial& m, const VariableTable& table, int sign) {
  std::string out;
  int factors = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const int e = m.exponent(static_cast<Var>(i)) * sign;
    if (e <= 0) continue;
    if (!out.empty()) out += '*';
    out += table.name(static_cast<Var>(i));
    if (e != 1) out += '^' + std::to_string(e);
    ++factors;
  }
  if (factors > 1 && sign < 0) out = "(" + out + ")";
  return out;
}

}  // namespace

CharacterList::CharacterList(TablePtr table, std::vector<Monomial> entries)
    : table_(std::move(table)), entries_(std::move(entries)) {
  if (!table_) throw InvalidArgument("character list needs a variable table");
  for (const auto& m : entries_) check_entry(m, *table_);
}

void CharacterList::push_back(const Monomial& m) {
  check_entry(m, *table_);
  entries_.push_back(m);
}

CharacterList& CharacterList::operator+=(const CharacterList& other) {
  require_same(*this, other);
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  return *this;
}

bool CharacterList::operator==(const CharacterList& other) const {
  return same_table(table_, other.table_) && entries_ == other.entries_;
}

std::string character_to_string(const Monomial& m, const VariableTable& table) {
  std::string num = monomial_part(m, table, 1);
  std::string den = monomial_part(m, table, -1);
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/" + den;
}

std::string CharacterList::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += character_to_string(entries_[i], *table_);
  }
  return out + ")";
}

CharacterList standard_set(const TablePtr& table, StandardSet kind, int n) {
  auto var = [&](const std::string& name) { return Monomial::of(table->at(name)); };
  CharacterList out(table);
  if (kind == StandardSet::T_flat) {
    const Monomial t1 = var("t1"), t2 = var("t2");
    for (const auto& m : {t1, t2, t1 / t2, Monomial{}, t2 / t1, t2.inverse(), t1.inverse()}) out.push_back(m);
    return out;
  }
  if (n < 1) throw InvalidArgument("standard set size must be at least 1");
  const std::string prefix = kind == StandardSet::Z ? "z" : "t";
  for (int i = 1; i <= n; ++i) out.push_back(var(prefix + std::to_string(i)));
  if (kind == StandardSet::T_pm || kind == StandardSet::T_sharp) {
    for (int i = 1; i <= n; ++i) out.push_back(var("t" + std::to_string(i)).inverse());
  }
  if (kind == StandardSet::T_sharp) out.push_back(Monomial{});
  return out;
}

CharacterList inverse(const CharacterList& a) {
  CharacterList out(a.table());
  for (const auto& m : a) out.push_back(m.inverse());
  return out;
}

CharacterList lambda2(const CharacterList& a) {
  CharacterList out(a.table());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) out.push_back(a[i] * a[j]);
  }
  return out;
}

CharacterList sym2(const CharacterList& a) {
  CharacterList out(a.table());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) out.push_back(a[i] * a[j]);
  }
  return out;
}

CharacterList roots(const CharacterList& a) {
  CharacterList out(a.table());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) out.push_back(a[i] / a[j]);
    }
  }
  return out;
}

CharacterList positive_roots(const CharacterList& a) {
  CharacterList out(a.table());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) out.push_back(a[i] / a[j]);
  }
  return out;
}

CharacterList quotient(const CharacterList& a, const CharacterList& b) {
  require_same(a, b);
  CharacterList out(a.table());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x / y);
  }
  return out;
}

CharacterList pairwise_product(const CharacterList& a, const CharacterList& b) {
  require_same(a, b);
  CharacterList out(a.table());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

CharacterList complement(const CharacterList& a, const CharacterList& ambient) {
  require_same(a, ambient);
  std::vector<bool> taken(ambient.size(), false);
  for (const auto& m : a) {
    bool found = false;
    for (std::size_t i = 0; i < ambient.size(); ++i) {
      if (!taken[i] && ambient[i] == m) {
        taken[i] = found = true;
        break;
      }
    }
    if (!found) {
      throw InvalidArgument("complement: " + character_to_string(m, *a.table()) + " is not in the ambient list");
    }
  }
  CharacterList out(a.table());
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (!taken[i]) out.push_back(ambient[i]);
  }
  return out;
}

CharacterList derived_set(DerivedTag tag, const CharacterList& a, const CharacterList* b,
                          const CharacterList* ambient) {
  switch (tag) {
    case DerivedTag::inverse: return inverse(a);
    case DerivedTag::lambda: return lambda2(a);
    case DerivedTag::sym: return sym2(a);
    case DerivedTag::roots: return roots(a);
    case DerivedTag::pos_roots: return positive_roots(a);
    case DerivedTag::quotient: return quotient(a, require(b, "second list"));
    case DerivedTag::pairwise_product: return pairwise_product(a, require(b, "second list"));
    case DerivedTag::complement: return complement(a, require(ambient, "ambient list"));
  }
  throw InvalidArgument("unknown derived set");
}

LaurentPolynomial bracket(const CharacterList& a) {
  const auto& table = a.table();
  LaurentPolynomial out = LaurentPolynomial::constant(table, 1);
  const LaurentPolynomial one = LaurentPolynomial::constant(table, 1);
  for (const auto& m : a) {
    out *= one - LaurentPolynomial::monomial(table, m.inverse());
    if (out.is_zero()) break;
  }
  return out;
}

}  // namespace kpush
