#include <gtest/gtest.h>

#include "support.hpp"

using namespace strata;
using namespace strata::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

}  // namespace

TEST(ParseForm, Basics) {
  const auto f = parse_form<Rational>("u^2 + v^2", Q);
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_EQ(render(f), "u^2 + v^2");
  const auto g = parse_form<Modular>("3*u*v", F5);
  EXPECT_EQ(g.coefficient(1).value(), 3u);
  EXPECT_EQ(render(parse_form<Rational>("-u*v + 1/2*v^2 - 3*u^2", Q)),
            "-3*u^2 - u*v + 1/2*v^2");
  EXPECT_EQ(render(parse_form<Rational>("u*u*v", Q)), "u^2*v");
  EXPECT_EQ(render(parse_form<Rational>("u + u", Q)), "2*u");
  EXPECT_TRUE(parse_form<Rational>("u - u", Q).is_zero());
  EXPECT_EQ(render(parse_form<Rational>("7", Q)), "7");
  EXPECT_EQ(render(parse_form<Modular>("7*u", F5)), "2*u");
}

TEST(ParseForm, Errors) {
  EXPECT_ERROR_CODE(parse_form<Rational>("u + v^2", Q), ErrorCode::NotHomogeneous);
  EXPECT_ERROR_CODE(parse_form<Rational>("u +", Q), ErrorCode::SyntaxError);
  EXPECT_ERROR_CODE(parse_form<Rational>("x", Q), ErrorCode::SyntaxError);
  EXPECT_ERROR_CODE(parse_form<Rational>("u v", Q), ErrorCode::SyntaxError);
  EXPECT_ERROR_CODE(parse_form<Rational>("", Q), ErrorCode::SyntaxError);
  EXPECT_ERROR_CODE(parse_form<Rational>("u^99999", Q), ErrorCode::SyntaxError);
  EXPECT_ERROR_CODE(parse_form<Rational>("1/0*u", Q), ErrorCode::BadScalarLiteral);
  EXPECT_ERROR_CODE(parse_form<Modular>("1/5*u", F5), ErrorCode::BadScalarLiteral);
  try {
    parse_form<Rational>("u + * v", Q);
    FAIL();
  } catch (const Error& e) {
    ASSERT_TRUE(e.position().has_value());
    EXPECT_EQ(*e.position(), 4u);
  }
}

TEST(ParseMorphism, Basics) {
  const auto c = parse_morphism<Rational>("(u^2 : u*v : v^2)", Q);
  EXPECT_EQ(c.morphism.degree(), 2u);
  EXPECT_FALSE(c.stripped());
  const auto s = parse_morphism<Rational>("(u*v : v^2)", Q);
  EXPECT_EQ(render(s.morphism), "(u : v)");
  EXPECT_TRUE(s.stripped());
  EXPECT_EQ(render(s.stripped_factor), "v");
  EXPECT_ERROR_CODE(parse_morphism<Rational>("(u)", Q), ErrorCode::SyntaxError);
  EXPECT_ERROR_CODE(parse_morphism<Rational>("(u : v", Q), ErrorCode::SyntaxError);
  EXPECT_ERROR_CODE(parse_morphism<Rational>("(u : v^2)", Q), ErrorCode::DegreeMismatch);
  EXPECT_ERROR_CODE(parse_morphism<Rational>("(0 : 0)", Q), ErrorCode::AllZero);
}

TEST(ParsePoint, Basics) {
  EXPECT_EQ(render(parse_point<Rational>("(2:4:6)", Q)), "(1:2:3)");
  EXPECT_EQ(render(parse_point<Rational>("(0 : -3 : 1/2)", Q)), "(0:1:-1/6)");
  EXPECT_EQ(render(parse_point<Modular>("(0:3:0)", F5)), "(0:1:0)");
  EXPECT_ERROR_CODE(parse_point<Rational>("(0:0)", Q), ErrorCode::AllZero);
  EXPECT_ERROR_CODE(parse_point<Rational>("1:0", Q), ErrorCode::SyntaxError);
  const auto list = parse_point_list<Rational>("(1:0:0), (0:1:0);(0:0:1)", Q);
  EXPECT_EQ(list.size(), 3u);
  EXPECT_TRUE(parse_point_list<Rational>("  ", Q).empty());
  EXPECT_ERROR_CODE(parse_point_list<Rational>("(1:0", Q), ErrorCode::SyntaxError);
}

TEST(ParseScalar, Basics) {
  EXPECT_EQ(parse_scalar<Rational>("-6/4", Q).to_string(), "-3/2");
  EXPECT_EQ(parse_scalar<Modular>("-1", F5).value(), 4u);
  EXPECT_ERROR_CODE(parse_scalar<Rational>("1/", Q), ErrorCode::SyntaxError);
}

template <class K>
void round_trips(const FieldSpec& spec) {
  std::mt19937 rng(kSeed + 11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_form<K>(rng, spec, trial % 6);
    EXPECT_EQ(parse_form<K>(render(f), spec), f) << render(f);
    const auto m = random_morphism<K>(rng, spec, 1 + trial % 3, 1 + trial % 3);
    EXPECT_EQ(parse_morphism<K>(render(m), spec).morphism, m) << render(m);
    const auto p = random_point<K>(rng, spec, 1 + trial % 4);
    EXPECT_EQ(parse_point<K>(render(p), spec), p) << render(p);
  }
}

TEST(RoundTrip, Q) { round_trips<Rational>(Q); }
TEST(RoundTrip, F5) { round_trips<Modular>(F5); }
TEST(RoundTrip, F2) { round_trips<Modular>(FieldSpec::prime(2)); }
