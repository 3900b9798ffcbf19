#pragma once

// Ordered multisets of characters (Laurent monomials) and the constructions
// built from them: inverse, exterior and symmetric squares, roots, quotients,
// and the bracket [A] = prod (1 - 1/a).

#include <cstddef>
#include <string>
#include <vector>

#include "kpush/algebra.hpp"

namespace kpush {

class CharacterList {
 public:
  explicit CharacterList(TablePtr table, std::vector<Monomial> entries = {});

  const TablePtr& table() const { return table_; }
  const std::vector<Monomial>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Monomial& operator[](std::size_t i) const { return entries_.at(i); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  void push_back(const Monomial& m);
  // Concatenation (multiset union keeping order).
  CharacterList& operator+=(const CharacterList& other);
  friend CharacterList operator+(CharacterList a, const CharacterList& b) { return a += b; }

  bool operator==(const CharacterList& other) const;

  // "(t1, t2, t1/t2, 1, 1/(t1*t2))"
  std::string to_string() const;

 private:
  TablePtr table_;
  std::vector<Monomial> entries_;
};

// Renders a single character as a fraction of ordinary monomials.
std::string character_to_string(const Monomial& m, const VariableTable& table);

enum class StandardSet { T, Z, T_pm, T_sharp, T_flat };

// T = (t1..tn), Z = (z1..zn), T_pm = T then T^-1, T_sharp = T_pm then 1,
// T_flat = (t1, t2, t1/t2, 1, t2/t1, 1/t2, 1/t1). n is ignored for T_flat.
CharacterList standard_set(const TablePtr& table, StandardSet kind, int n = 0);

enum class DerivedTag { inverse, lambda, sym, roots, pos_roots, quotient, pairwise_product, complement };

// Generic entry point; `b` is required by quotient and pairwise_product,
// `ambient` by complement.
CharacterList derived_set(DerivedTag tag, const CharacterList& a, const CharacterList* b = nullptr,
                          const CharacterList* ambient = nullptr);

CharacterList inverse(const CharacterList& a);
// {a_i a_j : i < j}
CharacterList lambda2(const CharacterList& a);
// {a_i a_j : i <= j}
CharacterList sym2(const CharacterList& a);
// {a_i / a_j : i != j}
CharacterList roots(const CharacterList& a);
// {a_i / a_j : i < j}
CharacterList positive_roots(const CharacterList& a);
// {a / b : a in A, b in B}, A outer.
CharacterList quotient(const CharacterList& a, const CharacterList& b);
// {a * b : a in A, b in B}, A outer.
CharacterList pairwise_product(const CharacterList& a, const CharacterList& b);
// ambient minus A as multisets, keeping ambient order. Every entry of A must
// occur in ambient.
CharacterList complement(const CharacterList& a, const CharacterList& ambient);

// prod_{a in A} (1 - 1/a); 1 for the empty list.
LaurentPolynomial bracket(const CharacterList& a);

}  // namespace kpush
