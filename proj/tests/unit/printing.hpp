#pragma once

#include <doctest.h>

#include "kpush/algebra.hpp"
#include "kpush/characters.hpp"

namespace doctest {

template <>
struct StringMaker<kpush::LaurentPolynomial> {
  static String convert(const kpush::LaurentPolynomial& p) { return p.to_string().c_str(); }
};

template <>
struct StringMaker<kpush::CharacterList> {
  static String convert(const kpush::CharacterList& a) { return a.to_string().c_str(); }
};

}  // namespace doctest
