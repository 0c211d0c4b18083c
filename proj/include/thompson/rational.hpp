#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace thompson {

using Int = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Int pow2(std::size_t e);

/// True iff the reduced denominator is a power of two (integers included).
bool is_dyadic(const Rational& q);

Rational parse_rational(const std::string& text);  // "a/b" or "a"
std::string to_string(const Rational& q);          // "a/b"; plain "a" when b = 1

}  // namespace thompson
