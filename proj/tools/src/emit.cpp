#include "kpush_cli/emit.hpp"

namespace kpush::cli {

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw InvalidArgument("unknown output format '" + std::string(s) + "'");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::latex: return "latex";
  }
  return "?";
}

nlohmann::ordered_json to_json(const LaurentPolynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  const auto& table = *p.table();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json exponents = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.size(); ++i) {
      const int e = t.monomial.exponent(static_cast<Var>(i));
      if (e != 0) exponents[table.name(static_cast<Var>(i))] = e;
    }
    terms.push_back({{"coeff_num", t.coeff.get_num().get_str()},
                     {"coeff_den", t.coeff.get_den().get_str()},
                     {"exponents", std::move(exponents)}});
  }
  return {{"terms", std::move(terms)}};
}

namespace {

std::string latex_variable(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split == 0 || split == name.size()) return name;
  return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

}  // namespace

std::string to_latex(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  const auto& table = *p.table();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const int e = t.monomial.exponent(static_cast<Var>(i));
      if (e == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += latex_variable(table.name(static_cast<Var>(i)));
      if (e != 1) mono += "^{" + std::to_string(e) + "}";
    }
    std::string coeff;
    if (mag.get_den() != 1) {
      coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    } else if (mag != 1 || mono.empty()) {
      coeff = mag.get_num().get_str();
    }
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += " ";
    out += mono;
  }
  return out;
}

std::string emit(const LaurentPolynomial& p, Format format) {
  switch (format) {
    case Format::text: return p.to_string();
    case Format::json: return to_json(p).dump();
    case Format::latex: return to_latex(p);
  }
  return {};
}

}  // namespace kpush::cli
