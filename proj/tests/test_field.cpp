#include <gtest/gtest.h>

#include "support.hpp"

using namespace strata;
using namespace strata::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

}  // namespace

TEST(FieldSpec, PrimeValidation) {
  EXPECT_EQ(FieldSpec::prime(7).name(), "F7");
  EXPECT_EQ(Q.name(), "Q");
  EXPECT_ERROR_CODE(FieldSpec::prime(4), ErrorCode::NonPrimeField);
  EXPECT_ERROR_CODE(FieldSpec::prime(1), ErrorCode::NonPrimeField);
  EXPECT_ERROR_CODE(FieldSpec::prime(0), ErrorCode::NonPrimeField);
  EXPECT_ERROR_CODE(FieldSpec::prime(1ull << 31), ErrorCode::NonPrimeField);
  EXPECT_NO_THROW(FieldSpec::prime(2147483647ull));
}

TEST(Rational, FractionArithmetic) {
  const auto third = Rational::from_int(Q, 1) / Rational::from_int(Q, 3);
  const auto sixth = Rational::from_int(Q, 1) / Rational::from_int(Q, 6);
  EXPECT_EQ((third + sixth).to_string(), "1/2");
  EXPECT_EQ((third - sixth).to_string(), "1/6");
  EXPECT_EQ((third * sixth).to_string(), "1/18");
  EXPECT_EQ((-third).to_string(), "-1/3");
  EXPECT_TRUE((third - third).is_zero());
  EXPECT_TRUE((third * third.inv()).is_one());
}

TEST(Rational, InverseOfZero) {
  EXPECT_ERROR_CODE(Rational::zero(Q).inv(), ErrorCode::DivisionByZero);
  EXPECT_ERROR_CODE(Rational::one(Q) / Rational::zero(Q), ErrorCode::DivisionByZero);
}

TEST(Rational, LiteralWithZeroDenominator) {
  EXPECT_ERROR_CODE(Rational::from_literal(Q, 1, 0), ErrorCode::BadScalarLiteral);
  EXPECT_EQ(Rational::from_literal(Q, 4, 6).to_string(), "2/3");
}

TEST(Modular, InverseMod5) {
  const auto two = Modular::from_int(F5, 2);
  EXPECT_EQ(two.inv().value(), 3u);
  EXPECT_TRUE((two * two.inv()).is_one());
  EXPECT_ERROR_CODE(Modular::zero(F5).inv(), ErrorCode::DivisionByZero);
}

TEST(Modular, Reduction) {
  EXPECT_EQ(Modular::from_int(F5, -1).value(), 4u);
  EXPECT_EQ(Modular::from_int(F5, 17).value(), 2u);
  EXPECT_EQ(Modular::from_literal(F5, 7, 1).value(), 2u);
  // 1/2 = 3 mod 5
  EXPECT_EQ(Modular::from_literal(F5, 1, 2).value(), 3u);
  EXPECT_ERROR_CODE(Modular::from_literal(F5, 1, 10), ErrorCode::BadScalarLiteral);
}

TEST(Modular, MixedFieldsRejected) {
  const auto a = Modular::one(F5);
  const auto b = Modular::one(FieldSpec::prime(7));
  EXPECT_ERROR_CODE(a + b, ErrorCode::FieldMismatch);
  EXPECT_ERROR_CODE(a * b, ErrorCode::FieldMismatch);
  EXPECT_ERROR_CODE(Modular::one(Q), ErrorCode::FieldMismatch);
}

TEST(Modular, LargePrimeNoOverflow) {
  const FieldSpec big = FieldSpec::prime(2147483647ull);
  const auto a = Modular::from_int(big, 2147483646);
  EXPECT_TRUE((a * a).is_one());  // (-1)^2
  EXPECT_TRUE((a * a.inv()).is_one());
}

template <class K>
void field_axioms(const FieldSpec& spec) {
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const K a = random_scalar<K>(rng, spec);
    const K b = random_scalar<K>(rng, spec);
    const K c = random_scalar<K>(rng, spec);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inv()).is_one());
    }
  }
}

TEST(Field, AxiomsOverQ) { field_axioms<Rational>(Q); }
TEST(Field, AxiomsOverF5) { field_axioms<Modular>(F5); }
TEST(Field, AxiomsOverF2) { field_axioms<Modular>(FieldSpec::prime(2)); }

TEST(Error, MessageCarriesOperationAndCode) {
  const Error e(ErrorCode::SyntaxError, "parse_form", "expected 'u'", 3);
  EXPECT_EQ(std::string(e.what()), "parse_form: SyntaxError at position 3: expected 'u'");
  EXPECT_TRUE(is_usage_error(ErrorCode::SyntaxError));
  EXPECT_FALSE(is_usage_error(ErrorCode::AmbiguousLift));
}
