#include "kpush_cli/expression.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "kpush/g2.hpp"
#include "kpush/polyfam.hpp"

namespace kpush::cli {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, lbracket, rbracket, comma, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

const std::vector<std::string> kOperand{"number", "identifier", "'('", "'-'"};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::number, start, std::string(src.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::ident, start, std::string(src.substr(start, i - start))});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ',': kind = Tok::comma; break;
      default:
        throw SyntaxError(start, {"number", "identifier", "operator"},
                          "unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(start));
    }
    out.push_back({kind, start, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::end, src.size(), ""});
  return out;
}

ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (peek().kind != Tok::end) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string what = "syntax error at offset " + std::to_string(t.offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) what += i + 1 == expected.size() ? " or " : ", ";
      what += expected[i];
    }
    what += t.kind == Tok::end ? ", found end of input" : ", found '" + t.text + "'";
    throw SyntaxError(t.offset, std::move(expected), what);
  }

  void expect(Tok kind, const char* name) {
    if (peek().kind != kind) fail({name});
    ++pos_;
  }

  int small_int(const Token& t, bool negative) {
    mpz_class v(t.text);
    if (negative) v = -v;
    if (!v.fits_sint_p() || v > 10000 || v < -10000) {
      throw SyntaxError(t.offset, {"small integer"}, "integer out of range at offset " + std::to_string(t.offset));
    }
    return static_cast<int>(v.get_si());
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const char op = take().text[0];
      lhs = make(Binary{op, lhs, product()});
    }
    return lhs;
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const char op = take().text[0];
      lhs = make(Binary{op, lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == Tok::minus) {
      ++pos_;
      return make(Negate{unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek().kind != Tok::caret) return base;
    ++pos_;
    bool negative = false;
    if (peek().kind == Tok::minus) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Tok::number) fail({"integer exponent"});
    return make(Power{base, small_int(take(), negative)});
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        ++pos_;
        return make(Number{mpz_class(t.text)});
      }
      case Tok::ident: {
        ++pos_;
        if ((t.text == "G" || t.text == "S") && peek().kind == Tok::lbracket) {
          ++pos_;
          if (peek().kind != Tok::number) fail({"number"});
          const int a = small_int(take(), false);
          int b = 0;
          if (peek().kind == Tok::comma) {
            ++pos_;
            if (peek().kind != Tok::number) fail({"number"});
            b = small_int(take(), false);
          }
          expect(Tok::rbracket, "']'");
          if (b > a) {
            throw SyntaxError(t.offset, {"partition"}, "class index must satisfy a >= b at offset " + std::to_string(t.offset));
          }
          return make(ClassMacro{t.text[0], a, b});
        }
        return make(Symbol{t.text});
      }
      case Tok::lparen: {
        ++pos_;
        ExprPtr inner = sum();
        expect(Tok::rparen, "')'");
        return inner;
      }
      default: fail(kOperand);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return (b->op == '+' || b->op == '-') ? 1 : 2;
  if (std::holds_alternative<Negate>(e.node)) return 3;
  if (std::holds_alternative<Power>(e.node)) return 4;
  return 5;
}

std::string wrap(const ExprPtr& e, bool parens) { return parens ? "(" + render(e) + ")" : render(e); }

bool is_macro_symbol(const std::string& name) { return name == "U" || name == "Uz" || name == "Ut"; }

void collect(const ExprPtr& e, std::set<std::string>& out, bool include_macros) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Symbol>) {
          if (!is_macro_symbol(n.name)) {
            out.insert(n.name);
          } else if (include_macros) {
            if (n.name != "Ut") out.insert({"z1", "z2"});
            if (n.name != "Uz") out.insert({"t1", "t2"});
          }
        } else if constexpr (std::is_same_v<N, ClassMacro>) {
          if (include_macros) {
            if (n.family == 'G') out.insert({"z1", "z2"});
            if (n.family == 'S') out.insert({"x1", "x2"});
          }
        } else if constexpr (std::is_same_v<N, Negate>) {
          collect(n.operand, out, include_macros);
        } else if constexpr (std::is_same_v<N, Binary>) {
          collect(n.lhs, out, include_macros);
          collect(n.rhs, out, include_macros);
        } else if constexpr (std::is_same_v<N, Power>) {
          collect(n.base, out, include_macros);
        }
      },
      e->node);
}

// Sort key: letter group (z, t, x, other), then prefix, then numeric suffix.
std::tuple<int, std::string, long, std::string> symbol_key(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  const std::string prefix = name.substr(0, split);
  const long index = split < name.size() && name.size() - split < 9 ? std::stol(name.substr(split)) : -1;
  const int group = prefix == "z" ? 0 : prefix == "t" ? 1 : prefix == "x" ? 2 : 3;
  return {group, prefix, index, name};
}

}  // namespace

ExprPtr parse_expression(std::string_view src) { return Parser(src).parse(); }

std::string render(const ExprPtr& e) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Number>) {
          return n.value.get_str();
        } else if constexpr (std::is_same_v<N, Symbol>) {
          return n.name;
        } else if constexpr (std::is_same_v<N, ClassMacro>) {
          return std::string(1, n.family) + "[" + std::to_string(n.a) + "," + std::to_string(n.b) + "]";
        } else if constexpr (std::is_same_v<N, Negate>) {
          return "-" + wrap(n.operand, precedence(*n.operand) < 3);
        } else if constexpr (std::is_same_v<N, Binary>) {
          const int p = (n.op == '+' || n.op == '-') ? 1 : 2;
          const std::string op = p == 1 ? std::string(" ") + n.op + " " : std::string(1, n.op);
          return wrap(n.lhs, precedence(*n.lhs) < p) + op + wrap(n.rhs, precedence(*n.rhs) <= p);
        } else {
          return wrap(n.base, precedence(*n.base) < 5) + "^" + std::to_string(n.exponent);
        }
      },
      e->node);
}

std::vector<std::string> symbols(const ExprPtr& e) {
  std::set<std::string> names;
  collect(e, names, false);
  return {names.begin(), names.end()};
}

LaurentPolynomial evaluate(const ExprPtr& e, const TablePtr& table) {
  return std::visit(
      [&](const auto& n) -> LaurentPolynomial {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Number>) {
          return LaurentPolynomial::constant(table, Rational(n.value));
        } else if constexpr (std::is_same_v<N, Symbol>) {
          if (table->find(n.name)) return LaurentPolynomial::variable(table, n.name);
          if (is_macro_symbol(n.name)) {
            const auto& d = g2_data();
            const auto& value = n.name == "U" ? d.u_class : n.name == "Uz" ? d.u_z : d.u_t;
            return rebase(value, table);
          }
          throw InvalidArgument("unknown variable '" + n.name + "'");
        } else if constexpr (std::is_same_v<N, ClassMacro>) {
          return n.family == 'G' ? grothendieck_pair(n.a, n.b, table) : schur_pair(n.a, n.b, table);
        } else if constexpr (std::is_same_v<N, Negate>) {
          return -evaluate(n.operand, table);
        } else if constexpr (std::is_same_v<N, Binary>) {
          LaurentPolynomial lhs = evaluate(n.lhs, table);
          LaurentPolynomial rhs = evaluate(n.rhs, table);
          switch (n.op) {
            case '+': return lhs + rhs;
            case '-': return lhs - rhs;
            case '*': return lhs * rhs;
            default:
              if (rhs.is_zero()) throw InvalidArgument("division by zero");
              if (auto q = try_exact_divide(lhs, rhs)) return *std::move(q);
              throw NotPolynomial("(" + lhs.to_string() + ") / (" + rhs.to_string() +
                                  ") is not a Laurent polynomial");
          }
        } else {
          const auto base = evaluate(n.base, table);
          if (n.exponent < 0 && !base.is_monomial()) {
            throw NotPolynomial("(" + base.to_string() + ")^" + std::to_string(n.exponent) +
                                " is not a Laurent polynomial");
          }
          return base.pow(n.exponent);
        }
      },
      e->node);
}

TablePtr infer_table(const ExprPtr& e) {
  std::set<std::string> names;
  collect(e, names, true);
  std::vector<std::string> sorted(names.begin(), names.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const std::string& a, const std::string& b) { return symbol_key(a) < symbol_key(b); });
  std::vector<VariableTable::Entry> entries;
  for (const auto& name : sorted) {
    const bool residue = name[0] == 'z' || name[0] == 'x';
    entries.push_back({name, residue ? VarClass::residue : VarClass::parameter});
  }
  return VariableTable::create(std::move(entries));
}

LaurentPolynomial parse_polynomial(std::string_view src, const TablePtr& table) {
  return evaluate(parse_expression(src), table);
}

LaurentPolynomial parse_polynomial(std::string_view src) {
  const ExprPtr e = parse_expression(src);
  return evaluate(e, infer_table(e));
}

}  // namespace kpush::cli
