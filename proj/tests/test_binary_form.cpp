#include <gtest/gtest.h>

#include "support.hpp"

using namespace strata;
using namespace strata::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F5 = FieldSpec::prime(5);

BinaryForm<Rational> fq(const char* s) { return form<Rational>(s, Q); }
BinaryForm<Modular> f5(const char* s) { return form<Modular>(s, F5); }

}  // namespace

TEST(BinaryForm, Construction) {
  const auto f = fq("u^2 + v^2");
  EXPECT_EQ(f.degree(), 2u);
  ASSERT_EQ(f.coefficients().size(), 3u);
  EXPECT_TRUE(f.coefficient(0).is_one());
  EXPECT_TRUE(f.coefficient(1).is_zero());
  EXPECT_TRUE(f.coefficient(2).is_one());

  const auto z = BinaryForm<Rational>::from_coefficients(Q, {Rational::zero(Q), Rational::zero(Q)});
  EXPECT_TRUE(z.is_zero());
  EXPECT_ERROR_CODE(z.degree(), ErrorCode::ZeroForm);
  EXPECT_TRUE(BinaryForm<Rational>::constant(Rational::from_int(Q, 3)).is_constant());
}

TEST(BinaryForm, RingOps) {
  EXPECT_EQ(fq("u + v") + fq("u - v"), fq("2*u"));
  EXPECT_EQ(fq("u + v") * fq("u - v"), fq("u^2 - v^2"));
  EXPECT_EQ((fq("u*v") * fq("v")).degree(), 3u);
  EXPECT_TRUE((fq("u + v") - fq("u + v")).is_zero());
  EXPECT_EQ(scale(Rational::from_int(Q, 3), fq("u - v")), fq("3*u - 3*v"));
  EXPECT_EQ(pow(fq("u + v"), 2), fq("u^2 + 2*u*v + v^2"));
  EXPECT_TRUE((fq("u") * BinaryForm<Rational>::zero(Q)).is_zero());
  // zero is the additive identity for every degree
  EXPECT_EQ(fq("u^3") + BinaryForm<Rational>::zero(Q), fq("u^3"));
}

TEST(BinaryForm, RingOpErrors) {
  EXPECT_ERROR_CODE(fq("u") + fq("u^2"), ErrorCode::DegreeMismatch);
  EXPECT_ERROR_CODE(fq("u") - fq("u^2"), ErrorCode::DegreeMismatch);
  EXPECT_ERROR_CODE(f5("u") + form<Modular>("u", FieldSpec::prime(7)), ErrorCode::FieldMismatch);
}

TEST(BinaryForm, DivExact) {
  EXPECT_EQ(div_exact(fq("u^2 - v^2"), fq("u - v")), fq("u + v"));
  EXPECT_EQ(div_exact(fq("u^2 - v^2"), fq("1")), fq("u^2 - v^2"));
  EXPECT_ERROR_CODE(div_exact(fq("u^2"), fq("v")), ErrorCode::NotDivisible);
  EXPECT_ERROR_CODE(div_exact(fq("u"), fq("u^2")), ErrorCode::NotDivisible);
  EXPECT_ERROR_CODE(div_exact(fq("u^2 + v^2"), fq("u + v")), ErrorCode::NotDivisible);
  EXPECT_ERROR_CODE(div_exact(fq("u"), BinaryForm<Rational>::zero(Q)), ErrorCode::DivisionByZero);
  EXPECT_EQ(div_exact(fq("u^3*v^2"), fq("u*v^2")), fq("u^2"));
}

TEST(BinaryForm, Gcd) {
  EXPECT_EQ(gcd(fq("u*v"), fq("v^2")), fq("v"));
  EXPECT_EQ(gcd(fq("2*u + 2*v"), BinaryForm<Rational>::zero(Q)), fq("u + v"));
  EXPECT_EQ(gcd(fq("u^2 - v^2"), fq("u + v")), fq("u + v"));
  EXPECT_EQ(gcd(fq("u^2"), fq("v^2")), fq("1"));
  EXPECT_EQ(gcd(fq("u^3 - u*v^2"), fq("u^2*v + u*v^2")), fq("u^2 + u*v"));
  EXPECT_ERROR_CODE(gcd(BinaryForm<Rational>::zero(Q), BinaryForm<Rational>::zero(Q)),
                    ErrorCode::BothZero);
  // u^2 + v^2 = (u + v)^2 over F_2
  EXPECT_EQ(gcd(form<Modular>("u^2 + v^2", F2), form<Modular>("u*v + v^2", F2)),
            form<Modular>("u + v", F2));
}

TEST(BinaryForm, Evaluate) {
  const auto one = Rational::one(Q);
  const auto zero = Rational::zero(Q);
  EXPECT_TRUE(evaluate(fq("u"), one, zero).is_one());
  EXPECT_TRUE(evaluate(fq("v"), one, zero).is_zero());
  const auto o2 = Modular::one(F2);
  EXPECT_TRUE(evaluate(form<Modular>("u^2 + v^2", F2), o2, o2).is_zero());
  EXPECT_ERROR_CODE(evaluate(fq("u"), zero, zero), ErrorCode::ZeroPoint);
  EXPECT_EQ(evaluate(fq("u^2 - 3*u*v + v^2"), Rational::from_int(Q, 2), Rational::from_int(Q, 5)),
            Rational::from_int(Q, 4 - 30 + 25));
}

TEST(BinaryForm, NormalizeMonic) {
  EXPECT_EQ(normalize_monic(fq("2*u + 2*v")), fq("u + v"));
  EXPECT_EQ(normalize_monic(f5("3*v^2")), f5("v^2"));
  EXPECT_ERROR_CODE(normalize_monic(BinaryForm<Rational>::zero(Q)), ErrorCode::ZeroForm);
}

TEST(BinaryForm, Substitute) {
  // (u + v) o (u^2, v^2)
  EXPECT_EQ(substitute(fq("u + v"), fq("u^2"), fq("v^2")), fq("u^2 + v^2"));
  EXPECT_EQ(substitute(fq("u*v"), fq("u + v"), fq("u - v")), fq("u^2 - v^2"));
}

TEST(BinaryForm, CollectiveGcd) {
  const std::vector<BinaryForm<Rational>> forms{fq("u^2*v"), fq("u*v^2"), fq("u*v")};
  EXPECT_EQ(collective_gcd<Rational>(forms, Q), fq("u*v"));
  const std::vector<BinaryForm<Rational>> zeros{BinaryForm<Rational>::zero(Q)};
  EXPECT_TRUE(collective_gcd<Rational>(zeros, Q).is_zero());
}

TEST(BinaryForm, NormalizeTuple) {
  const std::vector<BinaryForm<Rational>> raw{fq("2*u*v"), fq("2*v^2"), BinaryForm<Rational>::zero(Q)};
  const auto t = normalize_tuple<Rational>(raw, Q, "test");
  EXPECT_EQ(t.degree, 1u);
  EXPECT_EQ(t.common_factor, fq("v"));
  EXPECT_EQ(t.forms[0], fq("u"));
  EXPECT_EQ(t.forms[1], fq("v"));
  EXPECT_TRUE(t.forms[2].is_zero());
}

template <class K>
void gcd_properties(const FieldSpec& spec) {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<std::size_t> deg(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto common = random_form<K>(rng, spec, deg(rng));
    const auto a = random_form<K>(rng, spec, deg(rng)) * common;
    const auto b = random_form<K>(rng, spec, deg(rng)) * common;
    const auto g = gcd(a, b);
    // divides both, is monic, is divisible by the planted factor
    EXPECT_NO_THROW(div_exact(a, g));
    EXPECT_NO_THROW(div_exact(b, g));
    EXPECT_TRUE(g.leading_coefficient().is_one());
    EXPECT_NO_THROW(div_exact(g, common));
    EXPECT_EQ(g, gcd(b, a));
    // cofactors are coprime
    EXPECT_EQ(gcd(div_exact(a, g), div_exact(b, g)).degree(), 0u);
  }
}

TEST(BinaryForm, GcdPropertiesQ) { gcd_properties<Rational>(Q); }
TEST(BinaryForm, GcdPropertiesF5) { gcd_properties<Modular>(F5); }
TEST(BinaryForm, GcdPropertiesF2) { gcd_properties<Modular>(F2); }

TEST(BinaryForm, ProductDegreeAndDivisionRoundTrip) {
  std::mt19937 rng(kSeed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_form<Rational>(rng, Q, trial % 4);
    const auto b = random_form<Rational>(rng, Q, (trial / 4) % 4);
    const auto p = a * b;
    EXPECT_EQ(p.degree(), a.degree() + b.degree());
    EXPECT_EQ(div_exact(p, b), a);
  }
}
