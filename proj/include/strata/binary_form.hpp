#pragma once

// Homogeneous polynomials in k[u, v].
//
// A nonzero form of degree d stores d+1 coefficients; index j holds the
// coefficient of u^(d-j) v^j. Setting u = 1 turns the coefficient vector,
// read low to high, into a univariate polynomial in v, and that is how
// division and gcd are computed. The zero form has no degree.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"
#include "strata/field.hpp"

namespace strata {

namespace detail {

// Univariate polynomials over K, low degree first, trimmed (no trailing 0).
template <FieldScalar K>
using Poly = std::vector<K>;

template <FieldScalar K>
void trim(Poly<K>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <FieldScalar K>
std::pair<Poly<K>, Poly<K>> poly_divmod(Poly<K> num, const Poly<K>& den,
                                        const FieldSpec& spec) {
  trim(num);
  if (num.size() < den.size()) return {Poly<K>{}, std::move(num)};
  const K lead_inv = den.back().inv();
  Poly<K> quot(num.size() - den.size() + 1, K::zero(spec));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const K c = num[k + den.size() - 1] * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < den.size(); ++i) {
      num[k + i] = num[k + i] - c * den[i];
    }
  }
  trim(num);
  return {std::move(quot), std::move(num)};
}

template <FieldScalar K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b, const FieldSpec& spec) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto rem = poly_divmod(std::move(a), b, spec).second;
    a = std::move(b);
    b = std::move(rem);
  }
  return a;
}

}  // namespace detail

template <FieldScalar K>
class BinaryForm {
 public:
  static BinaryForm zero(const FieldSpec& spec) { return BinaryForm(spec, {}); }

  static BinaryForm constant(const K& c) {
    return from_coefficients(c.spec(), {c});
  }

  /// c * u^a * v^b, of degree a + b.
  static BinaryForm monomial(const K& c, std::size_t u_exp, std::size_t v_exp) {
    const FieldSpec spec = c.spec();
    std::vector<K> coeffs(u_exp + v_exp + 1, K::zero(spec));
    coeffs[v_exp] = c;
    return from_coefficients(spec, std::move(coeffs));
  }

  static BinaryForm u(const FieldSpec& spec) {
    return monomial(K::one(spec), 1, 0);
  }
  static BinaryForm v(const FieldSpec& spec) {
    return monomial(K::one(spec), 0, 1);
  }

  /// Coefficients in u-descending order. An all-zero (or empty) vector gives
  /// the zero form.
  static BinaryForm from_coefficients(const FieldSpec& spec,
                                      std::vector<K> coeffs) {
    for (const K& c : coeffs) {
      require_same_field(spec, c.spec(), "binary_form");
    }
    const bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                                      [](const K& c) { return c.is_zero(); });
    if (all_zero) coeffs.clear();
    return BinaryForm(spec, std::move(coeffs));
  }

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const { return coeffs_.empty(); }

  std::size_t degree() const {
    if (is_zero()) throw Error(ErrorCode::ZeroForm, "degree");
    return coeffs_.size() - 1;
  }

  bool is_constant() const { return coeffs_.size() == 1; }

  const std::vector<K>& coefficients() const { return coeffs_; }
  const K& coefficient(std::size_t j) const { return coeffs_.at(j); }

  /// Exponent of the largest power of u dividing the form.
  std::size_t u_valuation() const {
    std::size_t last = coeffs_.size() - 1;
    while (coeffs_[last].is_zero()) --last;
    return coeffs_.size() - 1 - last;
  }

  /// Exponent of the largest power of v dividing the form.
  std::size_t v_valuation() const {
    std::size_t first = 0;
    while (coeffs_[first].is_zero()) ++first;
    return first;
  }

  const K& leading_coefficient() const { return coeffs_[v_valuation()]; }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

 private:
  BinaryForm(FieldSpec spec, std::vector<K> coeffs)
      : spec_(spec), coeffs_(std::move(coeffs)) {}

  FieldSpec spec_;
  std::vector<K> coeffs_;
};

template <FieldScalar K>
BinaryForm<K> operator+(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  require_same_field(f.spec(), g.spec(), "bf_ring_ops");
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() != g.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "bf_ring_ops",
                "adding forms of degree " + std::to_string(f.degree()) +
                    " and " + std::to_string(g.degree()));
  }
  std::vector<K> out = f.coefficients();
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = out[j] + g.coefficient(j);
  }
  return BinaryForm<K>::from_coefficients(f.spec(), std::move(out));
}

template <FieldScalar K>
BinaryForm<K> operator-(const BinaryForm<K>& f) {
  std::vector<K> out = f.coefficients();
  for (K& c : out) c = -c;
  return BinaryForm<K>::from_coefficients(f.spec(), std::move(out));
}

template <FieldScalar K>
BinaryForm<K> operator-(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  return f + (-g);
}

template <FieldScalar K>
BinaryForm<K> operator*(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  require_same_field(f.spec(), g.spec(), "bf_ring_ops");
  if (f.is_zero() || g.is_zero()) return BinaryForm<K>::zero(f.spec());
  const auto& a = f.coefficients();
  const auto& b = g.coefficients();
  std::vector<K> out(a.size() + b.size() - 1, K::zero(f.spec()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return BinaryForm<K>::from_coefficients(f.spec(), std::move(out));
}

template <FieldScalar K>
BinaryForm<K> scale(const K& c, const BinaryForm<K>& f) {
  require_same_field(c.spec(), f.spec(), "bf_ring_ops");
  std::vector<K> out = f.coefficients();
  for (K& x : out) x = c * x;
  return BinaryForm<K>::from_coefficients(f.spec(), std::move(out));
}

template <FieldScalar K>
BinaryForm<K> pow(const BinaryForm<K>& f, std::size_t e) {
  auto out = BinaryForm<K>::constant(K::one(f.spec()));
  for (std::size_t i = 0; i < e; ++i) out = out * f;
  return out;
}

/// Rescale so the first nonzero coefficient is 1.
template <FieldScalar K>
BinaryForm<K> normalize_monic(const BinaryForm<K>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "bf_normalize_monic");
  if (f.leading_coefficient().is_one()) return f;
  return scale(f.leading_coefficient().inv(), f);
}

/// Q with f = g * q, or NotDivisible.
template <FieldScalar K>
BinaryForm<K> div_exact(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  require_same_field(f.spec(), g.spec(), "bf_div_exact");
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "bf_div_exact");
  if (f.is_zero()) return f;
  const FieldSpec spec = f.spec();
  if (f.degree() < g.degree() || f.u_valuation() < g.u_valuation()) {
    throw Error(ErrorCode::NotDivisible, "bf_div_exact");
  }
  detail::Poly<K> num = f.coefficients();
  detail::Poly<K> den = g.coefficients();
  detail::trim(den);
  auto [quot, rem] = detail::poly_divmod(std::move(num), den, spec);
  if (!rem.empty()) throw Error(ErrorCode::NotDivisible, "bf_div_exact");
  quot.resize(f.degree() - g.degree() + 1, K::zero(spec));
  return BinaryForm<K>::from_coefficients(spec, std::move(quot));
}

/// Monic greatest common divisor.
///
/// The u-power is split off as min of the u-valuations; the rest is a
/// univariate Euclid in v after setting u = 1.
template <FieldScalar K>
BinaryForm<K> gcd(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  require_same_field(f.spec(), g.spec(), "bf_gcd");
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "bf_gcd");
  if (f.is_zero()) return normalize_monic(g);
  if (g.is_zero()) return normalize_monic(f);
  const FieldSpec spec = f.spec();
  const std::size_t u_exp = std::min(f.u_valuation(), g.u_valuation());
  detail::Poly<K> h = detail::poly_gcd<K>(f.coefficients(), g.coefficients(),
                                          spec);
  h.resize(h.size() + u_exp, K::zero(spec));
  return normalize_monic(BinaryForm<K>::from_coefficients(spec, std::move(h)));
}

/// gcd of every form in the span; the zero form if all of them are zero.
template <FieldScalar K>
BinaryForm<K> collective_gcd(std::span<const BinaryForm<K>> forms,
                             const FieldSpec& spec) {
  auto acc = BinaryForm<K>::zero(spec);
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    acc = gcd(acc, f);
    if (acc.is_constant()) break;
  }
  return acc;
}

/// F(u0, v0).
template <FieldScalar K>
K evaluate(const BinaryForm<K>& f, const K& u0, const K& v0) {
  require_same_field(u0.spec(), v0.spec(), "bf_eval");
  require_same_field(f.spec(), u0.spec(), "bf_eval");
  if (u0.is_zero() && v0.is_zero()) throw Error(ErrorCode::ZeroPoint, "bf_eval");
  const FieldSpec spec = f.spec();
  if (f.is_zero()) return K::zero(spec);
  // Horner in t = v0/u0 (or u0/v0), then multiply back the dominant power.
  const auto& c = f.coefficients();
  const std::size_t d = c.size() - 1;
  K acc = K::zero(spec);
  if (!u0.is_zero()) {
    const K t = v0 / u0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * t + c[j];
    K scale_by = K::one(spec);
    for (std::size_t i = 0; i < d; ++i) scale_by = scale_by * u0;
    return acc * scale_by;
  }
  // u0 = 0: only the pure v^d term survives
  K vd = K::one(spec);
  for (std::size_t i = 0; i < d; ++i) vd = vd * v0;
  return c[d] * vd;
}

/// F(g0, g1) for forms g0, g1 of a common degree.
template <FieldScalar K>
BinaryForm<K> substitute(const BinaryForm<K>& f, const BinaryForm<K>& g0,
                         const BinaryForm<K>& g1) {
  const FieldSpec spec = f.spec();
  if (f.is_zero()) return f;
  const std::size_t d = f.degree();
  std::vector<BinaryForm<K>> p0{BinaryForm<K>::constant(K::one(spec))};
  std::vector<BinaryForm<K>> p1{BinaryForm<K>::constant(K::one(spec))};
  for (std::size_t i = 0; i < d; ++i) {
    p0.push_back(p0.back() * g0);
    p1.push_back(p1.back() * g1);
  }
  auto out = BinaryForm<K>::zero(spec);
  for (std::size_t j = 0; j <= d; ++j) {
    const K& c = f.coefficient(j);
    if (c.is_zero()) continue;
    out = out + scale(c, p0[d - j] * p1[j]);
  }
  return out;
}

/// Result of dividing a tuple of equal-degree forms by their collective gcd
/// and rescaling so the first nonzero coefficient of the first nonzero form
/// is 1.
template <FieldScalar K>
struct NormalizedTuple {
  std::vector<BinaryForm<K>> forms;
  BinaryForm<K> common_factor;
  std::size_t degree;
};

template <FieldScalar K>
NormalizedTuple<K> normalize_tuple(std::span<const BinaryForm<K>> raw,
                                   const FieldSpec& spec,
                                   const char* operation) {
  std::size_t degree = 0;
  bool seen = false;
  for (const auto& f : raw) {
    require_same_field(spec, f.spec(), operation);
    if (f.is_zero()) continue;
    if (seen && f.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, operation,
                  "forms of degree " + std::to_string(degree) + " and " +
                      std::to_string(f.degree()));
    }
    degree = f.degree();
    seen = true;
  }
  if (!seen) throw Error(ErrorCode::AllZero, operation);

  const BinaryForm<K> h = collective_gcd(raw, spec);
  std::vector<BinaryForm<K>> forms;
  forms.reserve(raw.size());
  for (const auto& f : raw) {
    forms.push_back(h.is_constant() ? f : div_exact(f, h));
  }
  auto lead = std::find_if(forms.begin(), forms.end(),
                           [](const auto& f) { return !f.is_zero(); });
  const K c = lead->leading_coefficient();
  if (!c.is_one()) {
    const K c_inv = c.inv();
    for (auto& f : forms) f = scale(c_inv, f);
  }
  return {std::move(forms), h, degree - h.degree()};
}

}  // namespace strata
