#include <gtest/gtest.h>

#include "support.hpp"

using namespace strata;
using namespace strata::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

std::vector<Rational> qs(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (long long x : xs) out.push_back(Rational::from_int(Q, x));
  return out;
}

}  // namespace

TEST(ProjectivePoint, Normalize) {
  EXPECT_EQ(ProjectivePoint<Rational>::normalize(qs({2, 4, 6})),
            pt<Rational>("(1:2:3)", Q));
  const auto p = ProjectivePoint<Modular>::normalize(
      {Modular::zero(F5), Modular::from_int(F5, 3), Modular::zero(F5)});
  EXPECT_EQ(p, pt<Modular>("(0:1:0)", F5));
  EXPECT_EQ(p.pivot(), 1u);
  EXPECT_ERROR_CODE(ProjectivePoint<Rational>::normalize(qs({0, 0})), ErrorCode::AllZero);
  EXPECT_ERROR_CODE(ProjectivePoint<Rational>::normalize({}), ErrorCode::AllZero);
}

TEST(ProjectivePoint, ScalingInvariance) {
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_point<Rational>(rng, Q, 3);
    const auto c = random_nonzero<Rational>(rng, Q);
    std::vector<Rational> scaled;
    for (const auto& x : p.coords()) scaled.push_back(c * x);
    EXPECT_EQ(ProjectivePoint<Rational>::normalize(scaled), p);
  }
}

TEST(ProjLinearMap, ApplyIdentitySwapInverse) {
  const auto x = pt<Rational>("(1:2:3)", Q);
  EXPECT_EQ(map_apply(ProjLinearMap<Rational>::identity(Q, 3), x), x);
  EXPECT_EQ(map_apply(ProjLinearMap<Rational>::swap(Q, 2, 0, 1), pt<Rational>("(1:0)", Q)),
            pt<Rational>("(0:1)", Q));
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_map<Rational>(rng, Q, 3);
    const auto p = random_point<Rational>(rng, Q, 2);
    EXPECT_EQ(map_apply(a.inverse(), map_apply(a, p)), p);
    EXPECT_EQ(a * a.inverse(), ProjLinearMap<Rational>::identity(Q, 3));
  }
}

TEST(ProjLinearMap, Errors) {
  EXPECT_ERROR_CODE(map_apply(ProjLinearMap<Rational>::identity(Q, 2), pt<Rational>("(1:2:3)", Q)),
                    ErrorCode::DimensionMismatch);
  Matrix<Rational> singular{qs({1, 2}), qs({2, 4})};
  EXPECT_ERROR_CODE(ProjLinearMap<Rational>::from_matrix(Q, singular), ErrorCode::SingularMatrix);
  Matrix<Rational> ragged{qs({1, 2}), qs({2})};
  EXPECT_ERROR_CODE(ProjLinearMap<Rational>::from_matrix(Q, ragged), ErrorCode::DimensionMismatch);
}

TEST(ProjLinearMap, Determinant) {
  Matrix<Rational> m{qs({2, 0, 1}), qs({1, 3, 2}), qs({1, 1, 1})};
  // 2(3-2) - 0 + 1(1-3)
  EXPECT_EQ(determinant(m, Q), Rational::from_int(Q, 0));
  Matrix<Rational> n{qs({0, 1}), qs({1, 0})};
  EXPECT_EQ(determinant(n, Q), Rational::from_int(Q, -1));
}

TEST(MoveToE0, Examples) {
  EXPECT_EQ(move_to_e0(pt<Rational>("(1:0:0)", Q)), ProjLinearMap<Rational>::identity(Q, 3));
  const auto s = move_to_e0(pt<Rational>("(0:1)", Q));
  EXPECT_EQ(s, ProjLinearMap<Rational>::swap(Q, 2, 0, 1));
  EXPECT_EQ(map_apply(s, pt<Rational>("(0:1)", Q)), pt<Rational>("(1:0)", Q));
  EXPECT_EQ(map_apply(move_to_e0(pt<Rational>("(1:1:1)", Q)), pt<Rational>("(1:1:1)", Q)),
            pt<Rational>("(1:0:0)", Q));
}

template <class K>
void move_property(const FieldSpec& spec) {
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_point<K>(rng, spec, 1 + trial % 4);
    const auto a = move_to_e0(p);
    EXPECT_EQ(map_apply(a, p), ProjectivePoint<K>::standard(spec, p.dimension(), 0));
  }
}

TEST(MoveToE0, SendsPointToE0Q) { move_property<Rational>(Q); }
TEST(MoveToE0, SendsPointToE0F5) { move_property<Modular>(F5); }
TEST(MoveToE0, SendsPointToE0F2) { move_property<Modular>(FieldSpec::prime(2)); }
