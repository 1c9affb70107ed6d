#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace gamelab {

using Json = nlohmann::ordered_json;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-3/4" or a finite decimal such as "0.125" into an exact value.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "num/den", or just "num" when the denominator is one.
std::string format_rational(const Rational& value);

// {"num": n, "den": d} with d > 0; throws std::overflow_error if either part
// does not fit in 64 bits.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

double to_double(const Rational& value);

// 2^-exponent as an exact value.
Rational pow2_inverse(int exponent);

}  // namespace gamelab
