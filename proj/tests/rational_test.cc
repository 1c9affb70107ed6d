#include "doctest.h"
#include "gamelab/rational.h"

namespace gamelab {
namespace {

TEST_CASE("parsing integers, fractions and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("formatting") {
  CHECK(format_rational(Rational(1, 4)) == "1/4");
  CHECK(format_rational(Rational(6, 3)) == "2");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("json round-trip reduces the fraction") {
  const Json j = rational_to_json(Rational(-3, 9));
  CHECK(j.dump() == R"({"num":-1,"den":3})");
  CHECK(rational_from_json(j) == Rational(-1, 3));
}

TEST_CASE("powers of two") {
  CHECK(pow2_inverse(0) == 1);
  CHECK(pow2_inverse(3) == Rational(1, 8));
  CHECK(to_double(pow2_inverse(2)) == doctest::Approx(0.25));
}

}  // namespace
}  // namespace gamelab
