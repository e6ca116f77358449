#include "cochain_forge/element.hpp"

#include "support.hpp"

using namespace testing;
using cf::Scalar;

TEST_CASE("scalars are kept in lowest terms with a positive denominator") {
  CHECK(Scalar(6, -4).str() == "-3/2");
  CHECK(Scalar(0, 7).str() == "0");
  CHECK(Scalar::parse("4/6") == Scalar(2, 3));
  CHECK(Scalar::parse("-10/5") == Scalar(-2));
  CHECK(Scalar::parse("-10/5").is_integer());
  CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
  CHECK(Scalar(2, 3) * Scalar(3, 2) == Scalar(1));
  CHECK(Scalar(-1, 2) < Scalar(1, 3));
}

TEST_CASE("scalar arithmetic never overflows") {
  Scalar big = Scalar::parse("123456789012345678901234567890/7");
  CHECK((big * Scalar(7)).str() == "123456789012345678901234567890");
  Scalar x(1);
  for (int k = 0; k < 200; ++k) x *= Scalar(3, 2);
  for (int k = 0; k < 200; ++k) x /= Scalar(3, 2);
  CHECK(x == Scalar(1));
}

TEST_CASE("zero denominators and malformed rationals are errors") {
  CHECK(expect_error([] { Scalar(1) / Scalar(0); }).kind() == cf::ErrorKind::DivisionByZero);
  CHECK(expect_error([] { Scalar(1, 0); }).kind() == cf::ErrorKind::DivisionByZero);
  CHECK(expect_error([] { Scalar::parse("3/0"); }).kind() == cf::ErrorKind::DivisionByZero);
  for (const char *bad : {"", "1.5", "abc", "1/", "/2", "--1", "1/-2", "+1"})
    CHECK(expect_error([&] { Scalar::parse(bad); }).kind() == cf::ErrorKind::Parse);
}

TEST_CASE("basis indices order e_n by n with t last") {
  CHECK(cf::e(-5) < cf::e(0));
  CHECK(cf::e(0) < cf::e(100));
  CHECK(cf::e(100) < cf::central_t());
  CHECK(cf::central_t().degree() == 0);
  CHECK(cf::e(-3).degree() == -3);
  CHECK(cf::BasisIndex::parse("e:-12") == cf::e(-12));
  CHECK(cf::BasisIndex::parse("t") == cf::central_t());
  CHECK(cf::e(7).str() == "e:7");
  for (const char *bad : {"e:", "e3", "x:1", "e:1.0", "T", "e:+1"})
    CHECK(expect_error([&] { cf::BasisIndex::parse(bad); }).kind() == cf::ErrorKind::Parse);
}

TEST_CASE("elements prune zero coefficients") {
  cf::Element x = E(3, q(2)) + E(3, q(-2));
  CHECK(x.is_zero());
  CHECK(x == cf::Element());
  cf::Element y = el({{cf::e(3), q(2, 3)}, {cf::central_t(), q(-1, 2)}});
  CHECK(y.terms().size() == 2);
  CHECK(y.str() == "2/3*e:3 - 1/2*t");
  CHECK(y.central_part() == T(q(-1, 2)));
  CHECK(y.non_central_part() == E(3, q(2, 3)));
  CHECK((y * Scalar(0)).is_zero());
  CHECK(y.coefficient(cf::e(4)) == Scalar(0));
  CHECK((y - y).is_zero());
}
