#pragma once

// Exact scalars: the rationals (GMP-backed) and prime fields F_p.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "strata/error.hpp"

namespace strata {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t k = 3; k * k <= p; k += 2) {
    if (p % k == 0) return false;
  }
  return true;
}

/// Which field a computation lives in. Characteristic 0 means Q.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }

  // Moduli are kept below 2^31 so products of residues fit in 64 bits.
  static FieldSpec prime(std::uint64_t p) {
    if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
      throw Error(ErrorCode::NonPrimeField, "field",
                  std::to_string(p) + " is not a supported prime");
    }
    return {Kind::PrimeField, p};
  }

  bool is_rationals() const { return kind == Kind::Rationals; }

  std::string name() const {
    return is_rationals() ? "Q" : "F" + std::to_string(characteristic);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b,
                               const char* operation) {
  if (a != b) {
    throw Error(ErrorCode::FieldMismatch, operation,
                a.name() + " vs " + b.name());
  }
}

/// Element of Q, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  static Rational zero(const FieldSpec& spec) {
    check_spec(spec);
    return Rational();
  }
  static Rational one(const FieldSpec& spec) { return from_int(spec, 1); }
  static Rational from_int(const FieldSpec& spec, long long n) {
    check_spec(spec);
    return Rational(mpq_class(mpz_class(std::to_string(n))));
  }
  static Rational from_literal(const FieldSpec& spec, const mpz_class& num,
                               const mpz_class& den) {
    check_spec(spec);
    if (den == 0) {
      throw Error(ErrorCode::BadScalarLiteral, "parse_scalar",
                  "zero denominator");
    }
    return Rational(mpq_class(num, den));
  }

  FieldSpec spec() const { return FieldSpec::rationals(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_negative() const { return sgn(value_) < 0; }

  Rational inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "scalar_arith");
    return Rational(mpq_class(1) / value_);
  }

  std::string to_string() const { return value_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "scalar_arith");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }

 private:
  static void check_spec(const FieldSpec& spec) {
    if (!spec.is_rationals()) {
      throw Error(ErrorCode::FieldMismatch, "scalar_arith",
                  "rational scalar requested for " + spec.name());
    }
  }

  mpq_class value_;
};

/// Residue in [0, p). Mixing moduli raises FieldMismatch.
class Modular {
 public:
  Modular(std::uint64_t modulus, std::uint64_t value)
      : p_(modulus), v_(value % modulus) {}

  static Modular zero(const FieldSpec& spec) { return from_int(spec, 0); }
  static Modular one(const FieldSpec& spec) { return from_int(spec, 1); }
  static Modular from_int(const FieldSpec& spec, long long n) {
    check_spec(spec);
    const auto p = static_cast<long long>(spec.characteristic);
    long long r = n % p;
    if (r < 0) r += p;
    return Modular(spec.characteristic, static_cast<std::uint64_t>(r));
  }
  static Modular from_literal(const FieldSpec& spec, const mpz_class& num,
                              const mpz_class& den) {
    check_spec(spec);
    const auto p = static_cast<unsigned long>(spec.characteristic);
    const std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0) {
      throw Error(ErrorCode::BadScalarLiteral, "parse_scalar",
                  "denominator " + den.get_str() + " vanishes in " +
                      spec.name());
    }
    const Modular n(spec.characteristic, mpz_fdiv_ui(num.get_mpz_t(), p));
    return n / Modular(spec.characteristic, d);
  }

  FieldSpec spec() const {
    return {FieldSpec::Kind::PrimeField, p_};
  }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return false; }

  Modular inv() const {
    if (v_ == 0) throw Error(ErrorCode::DivisionByZero, "scalar_arith");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_);
    std::int64_t new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Modular(p_, static_cast<std::uint64_t>(t));
  }

  std::string to_string() const { return std::to_string(v_); }

  friend Modular operator+(const Modular& a, const Modular& b) {
    check_pair(a, b);
    return Modular(a.p_, a.v_ + b.v_);
  }
  friend Modular operator-(const Modular& a, const Modular& b) {
    check_pair(a, b);
    return Modular(a.p_, a.v_ + a.p_ - b.v_);
  }
  friend Modular operator*(const Modular& a, const Modular& b) {
    check_pair(a, b);
    return Modular(a.p_, a.v_ * b.v_);
  }
  friend Modular operator/(const Modular& a, const Modular& b) {
    check_pair(a, b);
    return a * b.inv();
  }
  friend Modular operator-(const Modular& a) {
    return Modular(a.p_, a.p_ - a.v_);
  }
  friend bool operator==(const Modular& a, const Modular& b) {
    check_pair(a, b);
    return a.v_ == b.v_;
  }

 private:
  static void check_spec(const FieldSpec& spec) {
    if (spec.is_rationals()) {
      throw Error(ErrorCode::FieldMismatch, "scalar_arith",
                  "residue requested for Q");
    }
  }
  static void check_pair(const Modular& a, const Modular& b) {
    if (a.p_ != b.p_) {
      throw Error(ErrorCode::FieldMismatch, "scalar_arith",
                  "F" + std::to_string(a.p_) + " vs F" + std::to_string(b.p_));
    }
  }

  std::uint64_t p_;
  std::uint64_t v_;
};

template <class K>
concept FieldScalar = requires(const K a, const K b, const FieldSpec& spec,
                               long long n) {
  { K::zero(spec) } -> std::same_as<K>;
  { K::one(spec) } -> std::same_as<K>;
  { K::from_int(spec, n) } -> std::same_as<K>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inv() } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.is_negative() } -> std::convertible_to<bool>;
  { a.spec() } -> std::same_as<FieldSpec>;
  { a.to_string() } -> std::same_as<std::string>;
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<Modular>);

}  // namespace strata
