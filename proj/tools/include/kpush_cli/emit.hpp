#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kpush/algebra.hpp"

namespace kpush::cli {

enum class Format { text, json, latex };

Format parse_format(std::string_view s);
std::string to_string(Format f);

// {"terms":[{"coeff_num":"1","coeff_den":"1","exponents":{"t1":-1}}, ...]}
nlohmann::ordered_json to_json(const LaurentPolynomial& p);
std::string to_latex(const LaurentPolynomial& p);

// Text (canonical rendering), compact JSON, or LaTeX.
std::string emit(const LaurentPolynomial& p, Format format);

}  // namespace kpush::cli
