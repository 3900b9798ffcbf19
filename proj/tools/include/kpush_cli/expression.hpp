#pragma once

// Laurent-polynomial expressions: integers, variables, unary minus,
// + - * / and ^ with a (possibly negative) integer exponent, parentheses, and
// the macros G[a,b], S[a,b], Uz, Ut, U.

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kpush/algebra.hpp"

namespace kpush::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
  mpz_class value;  // nonnegative; signs are unary minus nodes
};
struct Symbol {
  std::string name;
};
// G[a,b] (Grothendieck class in z1, z2) or S[a,b] (Schur polynomial in x1, x2).
struct ClassMacro {
  char family;
  int a;
  int b;
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // + - * /
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Power {
  ExprPtr base;
  int exponent;
};

struct Expr {
  std::variant<Number, Symbol, ClassMacro, Negate, Binary, Power> node;
};

// Throws SyntaxError with the byte offset of the offending token.
ExprPtr parse_expression(std::string_view src);

// Minimal-parenthesis rendering; parse_expression(render(e)) has the same
// shape as e.
std::string render(const ExprPtr& e);

// Symbols occurring in e, excluding macro names.
std::vector<std::string> symbols(const ExprPtr& e);

// Evaluates over `table`. Symbols must exist in the table; macros expand to
// their polynomials (and need the variables they are written in).
LaurentPolynomial evaluate(const ExprPtr& e, const TablePtr& table);

// Table holding exactly the symbols used by e (macro variables included):
// z's, then t's, then x's, then the rest, each group sorted by index/name.
TablePtr infer_table(const ExprPtr& e);

// parse + infer_table + evaluate.
LaurentPolynomial parse_polynomial(std::string_view src, const TablePtr& table);
LaurentPolynomial parse_polynomial(std::string_view src);

}  // namespace kpush::cli
