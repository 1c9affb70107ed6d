#include "gamelab/rational.h"

#include <stdexcept>

namespace gamelab {
namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("sign without digits");
  cpp_int value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad digit in '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? cpp_int(-value) : value;
}

std::int64_t narrow(const cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational component exceeds 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    cpp_int num = parse_integer(text.substr(0, slash));
    cpp_int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer(text));
  std::string digits(text.substr(0, dot));
  std::string_view frac = text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+") digits += "0";
  cpp_int den = 1;
  for (char c : frac) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    }
    digits.push_back(c);
    den *= 10;
  }
  return Rational(parse_integer(digits), den);
}

std::string format_rational(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Json rational_to_json(const Rational& value) {
  Json j = Json::object();
  j["num"] = narrow(boost::multiprecision::numerator(value));
  j["den"] = narrow(boost::multiprecision::denominator(value));
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational must be {\"num\":..,\"den\":..}");
  }
  auto den = j.at("den").get<std::int64_t>();
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(cpp_int(j.at("num").get<std::int64_t>()), cpp_int(den));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational pow2_inverse(int exponent) {
  if (exponent >= 0) return Rational(cpp_int(1), cpp_int(1) << exponent);
  return Rational(cpp_int(1) << -exponent);
}

}  // namespace gamelab
