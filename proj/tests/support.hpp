#pragma once

// Shared helpers for the test binaries: fixed-seed random generators for
// scalars, forms, points, linear maps and morphisms.

#include <cstdint>
#include <random>
#include <vector>

#include "strata/strata.hpp"

namespace strata::testing {

inline constexpr std::uint32_t kSeed = 20240917u;

template <FieldScalar K>
K random_scalar(std::mt19937& rng, const FieldSpec& spec, int range = 5) {
  if (spec.is_rationals()) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    return K::from_int(spec, num(rng)) / K::from_int(spec, den(rng));
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, spec.characteristic - 1);
  return K::from_int(spec, static_cast<long long>(dist(rng)));
}

template <FieldScalar K>
K random_nonzero(std::mt19937& rng, const FieldSpec& spec) {
  while (true) {
    K c = random_scalar<K>(rng, spec);
    if (!c.is_zero()) return c;
  }
}

/// Random form of exactly degree d (some coefficient nonzero).
template <FieldScalar K>
BinaryForm<K> random_form(std::mt19937& rng, const FieldSpec& spec, std::size_t d) {
  while (true) {
    std::vector<K> c;
    for (std::size_t j = 0; j <= d; ++j) c.push_back(random_scalar<K>(rng, spec));
    auto f = BinaryForm<K>::from_coefficients(spec, std::move(c));
    if (!f.is_zero()) return f;
  }
}

template <FieldScalar K>
ProjectivePoint<K> random_point(std::mt19937& rng, const FieldSpec& spec, std::size_t n) {
  while (true) {
    std::vector<K> c;
    bool any = false;
    for (std::size_t j = 0; j <= n; ++j) {
      c.push_back(random_scalar<K>(rng, spec));
      any = any || !c.back().is_zero();
    }
    if (any) return ProjectivePoint<K>::normalize(std::move(c));
  }
}

template <FieldScalar K>
ProjLinearMap<K> random_map(std::mt19937& rng, const FieldSpec& spec, std::size_t size) {
  while (true) {
    Matrix<K> m(size);
    for (auto& row : m) {
      for (std::size_t j = 0; j < size; ++j) row.push_back(random_scalar<K>(rng, spec));
    }
    if (!determinant(m, spec).is_zero()) return ProjLinearMap<K>::from_matrix(spec, m);
  }
}

/// Random nonconstant morphism P^1 -> P^n of degree exactly d after
/// normalization.
template <FieldScalar K>
MorphismP1<K> random_morphism(std::mt19937& rng, const FieldSpec& spec, std::size_t n,
                              std::size_t d) {
  while (true) {
    std::vector<BinaryForm<K>> forms;
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<K> c;
      for (std::size_t j = 0; j <= d; ++j) c.push_back(random_scalar<K>(rng, spec));
      forms.push_back(BinaryForm<K>::from_coefficients(spec, std::move(c)));
    }
    bool all_zero = true;
    for (const auto& f : forms) all_zero = all_zero && f.is_zero();
    if (all_zero) continue;
    auto f = MorphismP1<K>::normalize(std::move(forms));
    if (f.degree() == d) return f;
  }
}

template <FieldScalar K>
BinaryForm<K> form(const char* text, const FieldSpec& spec) {
  return parse_form<K>(text, spec);
}

template <FieldScalar K>
MorphismP1<K> mor(const char* text, const FieldSpec& spec) {
  return parse_morphism<K>(text, spec).morphism;
}

template <FieldScalar K>
ProjectivePoint<K> pt(const char* text, const FieldSpec& spec) {
  return parse_point<K>(text, spec);
}

}  // namespace strata::testing

#define EXPECT_ERROR_CODE(stmt, expected)                                  \
  do {                                                                     \
    try {                                                                  \
      (void)(stmt);                                                        \
      ADD_FAILURE() << "expected " << ::strata::code_name(expected);       \
    } catch (const ::strata::Error& e) {                                   \
      EXPECT_EQ(e.code(), expected) << e.what();                           \
    }                                                                      \
  } while (0)
