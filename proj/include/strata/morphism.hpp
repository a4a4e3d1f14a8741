#pragma once

// Morphisms P^1 -> P^n given by (n+1)-tuples of coprime forms of one degree.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strata/binary_form.hpp"
#include "strata/error.hpp"
#include "strata/field.hpp"
#include "strata/projective.hpp"

namespace strata {

template <FieldScalar K>
class MorphismP1 {
 public:
  struct Normalized;

  /// Divide out the collective gcd and rescale canonically.
  static MorphismP1 normalize(std::vector<BinaryForm<K>> raw) {
    return normalize_reporting(std::move(raw)).morphism;
  }

  /// As normalize, also returning the stripped common factor (a constant
  /// form when nothing was stripped).
  static Normalized normalize_reporting(std::vector<BinaryForm<K>> raw);

  /// The constant morphism with the given value.
  static MorphismP1 constant(const ProjectivePoint<K>& value) {
    std::vector<BinaryForm<K>> forms;
    for (const K& c : value.coords()) {
      forms.push_back(c.is_zero() ? BinaryForm<K>::zero(value.spec())
                                  : BinaryForm<K>::constant(c));
    }
    return MorphismP1(value.spec(), 0, std::move(forms));
  }

  const FieldSpec& spec() const { return spec_; }
  std::size_t target_dimension() const { return forms_.size() - 1; }
  std::size_t degree() const { return degree_; }
  bool is_constant() const { return degree_ == 0; }
  const std::vector<BinaryForm<K>>& forms() const { return forms_; }
  const BinaryForm<K>& form(std::size_t i) const { return forms_[i]; }

  friend bool operator==(const MorphismP1& a, const MorphismP1& b) {
    return a.spec_ == b.spec_ && a.degree_ == b.degree_ && a.forms_ == b.forms_;
  }

 private:
  MorphismP1(FieldSpec spec, std::size_t degree,
             std::vector<BinaryForm<K>> forms)
      : spec_(spec), degree_(degree), forms_(std::move(forms)) {}

  FieldSpec spec_;
  std::size_t degree_;
  std::vector<BinaryForm<K>> forms_;
};

template <FieldScalar K>
struct MorphismP1<K>::Normalized {
  MorphismP1<K> morphism;
  BinaryForm<K> common_factor;
};

template <FieldScalar K>
auto MorphismP1<K>::normalize_reporting(std::vector<BinaryForm<K>> raw)
    -> Normalized {
  if (raw.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "mor_normalize",
                "a morphism to P^n needs at least two forms");
  }
  const FieldSpec spec = raw.front().spec();
  auto tuple = normalize_tuple<K>(raw, spec, "mor_normalize");
  return {MorphismP1(spec, tuple.degree, std::move(tuple.forms)),
          std::move(tuple.common_factor)};
}

template <FieldScalar K>
std::size_t mor_degree(const MorphismP1<K>& f) {
  return f.degree();
}

namespace detail {

template <FieldScalar K>
void require_nonconstant(const MorphismP1<K>& f, const char* operation) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantMorphism, operation);
}

template <FieldScalar K>
void require_target(const MorphismP1<K>& f, const ProjectivePoint<K>& p,
                    const char* operation) {
  require_same_field(f.spec(), p.spec(), operation);
  if (f.target_dimension() != p.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, operation,
                "morphism to P^" + std::to_string(f.target_dimension()) +
                    ", point in P^" + std::to_string(p.dimension()));
  }
}

template <FieldScalar K>
void require_parameter(const ProjectivePoint<K>& a, const FieldSpec& spec,
                       const char* operation) {
  require_same_field(spec, a.spec(), operation);
  if (a.dimension() != 1) {
    throw Error(ErrorCode::DimensionMismatch, operation,
                "parameter must be a point of P^1");
  }
}

}  // namespace detail

/// (F_0(a) : ... : F_n(a)).
template <FieldScalar K>
ProjectivePoint<K> mor_eval(const MorphismP1<K>& f, const ProjectivePoint<K>& a) {
  detail::require_parameter(a, f.spec(), "mor_eval");
  std::vector<K> values;
  values.reserve(f.forms().size());
  bool any = false;
  for (const auto& form : f.forms()) {
    values.push_back(evaluate(form, a[0], a[1]));
    any = any || !values.back().is_zero();
  }
  // A common root would give the forms a common linear factor.
  if (!any) throw Error(ErrorCode::IndeterminateAtPoint, "mor_eval");
  return ProjectivePoint<K>::normalize(std::move(values));
}

/// Forms replaced by the rows of A applied to them, then renormalized.
template <FieldScalar K>
MorphismP1<K> transform(const MorphismP1<K>& f, const ProjLinearMap<K>& a) {
  require_same_field(f.spec(), a.spec(), "transform");
  if (a.size() != f.forms().size()) {
    throw Error(ErrorCode::DimensionMismatch, "transform");
  }
  std::vector<BinaryForm<K>> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto acc = BinaryForm<K>::zero(f.spec());
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j).is_zero() || f.form(j).is_zero()) continue;
      acc = acc + scale(a(i, j), f.form(j));
    }
    out.push_back(std::move(acc));
  }
  return MorphismP1<K>::normalize(std::move(out));
}

/// The max-degree common divisor of F'_1..F'_n after moving p to
/// (1:0:...:0). Its degree is the parametric multiplicity.
template <FieldScalar K>
BinaryForm<K> multiplicity_divisor(const MorphismP1<K>& f,
                                   const ProjectivePoint<K>& p) {
  detail::require_target(f, p, "parametric_multiplicity");
  detail::require_nonconstant(f, "parametric_multiplicity");
  const auto moved = transform(f, move_to_e0(p));
  const auto tail = std::span(moved.forms()).subspan(1);
  return collective_gcd<K>(tail, f.spec());
}

template <FieldScalar K>
std::size_t parametric_multiplicity(const MorphismP1<K>& f,
                                    const ProjectivePoint<K>& p) {
  return multiplicity_divisor(f, p).degree();
}

/// Membership of p in the image. Over Q and F_p this is membership after
/// base change to the algebraic closure: a nonconstant gcd need not have a
/// root in the ground field.
struct ImageMembership {
  bool contains = false;
  std::size_t multiplicity = 0;
  bool after_base_change = true;
};

template <FieldScalar K>
ImageMembership image_contains(const MorphismP1<K>& f,
                               const ProjectivePoint<K>& p) {
  const std::size_t m = parametric_multiplicity(f, p);
  return {m >= 1, m, true};
}

/// f o g for a nonconstant g : P^1 -> P^1.
template <FieldScalar K>
MorphismP1<K> reparametrize(const MorphismP1<K>& f, const MorphismP1<K>& g) {
  require_same_field(f.spec(), g.spec(), "reparametrize");
  if (g.target_dimension() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "reparametrize",
                "reparametrization must map to P^1");
  }
  if (g.is_constant()) {
    throw Error(ErrorCode::ConstantReparametrization, "reparametrize");
  }
  std::vector<BinaryForm<K>> out;
  out.reserve(f.forms().size());
  for (const auto& form : f.forms()) {
    out.push_back(substitute(form, g.form(0), g.form(1)));
  }
  return MorphismP1<K>::normalize(std::move(out));
}

/// Length of the scheme-theoretic fiber f^{-1}(q).
template <FieldScalar K>
std::size_t fiber_degree(const MorphismP1<K>& f, const ProjectivePoint<K>& q) {
  detail::require_target(f, q, "fiber_degree");
  detail::require_nonconstant(f, "fiber_degree");
  const std::size_t j = q.pivot();
  auto acc = BinaryForm<K>::zero(f.spec());
  for (std::size_t i = 0; i < f.forms().size(); ++i) {
    if (i == j) continue;
    // q_j = 1 after normalization
    const auto cross = f.form(i) - scale(q[i], f.form(j));
    if (cross.is_zero()) continue;
    acc = gcd(acc, cross);
    if (acc.is_constant()) return 0;
  }
  return acc.is_zero() ? f.degree() : acc.degree();
}

/// Parameters used to sample fibers: 2d^2+1 affine parameters (t:1) over Q,
/// all of P^1(F_p) over a prime field.
template <FieldScalar K>
std::vector<ProjectivePoint<K>> sample_parameters(const FieldSpec& spec,
                                                  std::size_t d) {
  std::vector<ProjectivePoint<K>> out;
  if (spec.is_rationals()) {
    const std::size_t count = 2 * d * d + 1;
    for (std::size_t t = 0; t < count; ++t) {
      out.push_back(ProjectivePoint<K>::normalize(
          {K::from_int(spec, static_cast<long long>(t)), K::one(spec)}));
    }
    return out;
  }
  out.push_back(ProjectivePoint<K>::normalize({K::one(spec), K::zero(spec)}));
  for (std::uint64_t t = 0; t < spec.characteristic; ++t) {
    out.push_back(ProjectivePoint<K>::normalize(
        {K::from_int(spec, static_cast<long long>(t)), K::one(spec)}));
  }
  return out;
}

/// deg(f) = deg_g * deg_image, with g the map onto the normalization of the
/// image.
struct GeometricDegree {
  std::size_t deg_g;
  std::size_t deg_image;
};

/// Minimum fiber length over sampled image points. Any sample landing on a
/// smooth point of the image realizes deg_g. Parameters over singular
/// points number at most (d-1)(d-2), so the result is conclusive when the
/// sample set is larger than that, or when the minimum is already 1.
template <FieldScalar K>
GeometricDegree geometric_degree(const MorphismP1<K>& f) {
  detail::require_nonconstant(f, "geometric_degree");
  const std::size_t d = f.degree();
  const auto samples = sample_parameters<K>(f.spec(), d);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& a : samples) {
    best = std::min(best, fiber_degree(f, mor_eval(f, a)));
    if (best == 1) break;
  }
  const std::size_t singular_bound = (d - 1) * (d >= 2 ? d - 2 : 0);
  if (best != 1 && samples.size() <= singular_bound) {
    throw Error(ErrorCode::InconclusiveOverSmallField, "geometric_degree",
                std::to_string(samples.size()) +
                    " parameters cannot guarantee a smooth image point");
  }
  if (best == 0 || d % best != 0) {
    throw Error(ErrorCode::InconclusiveOverSmallField, "geometric_degree",
                "minimum fiber length " + std::to_string(best) +
                    " does not divide " + std::to_string(d));
  }
  return {best, d / best};
}

/// mu_p(C) = m_p(f) / deg_g.
struct ImageMultiplicity {
  std::size_t multiplicity;
  std::size_t deg_g;
};

template <FieldScalar K>
ImageMultiplicity image_multiplicity(const MorphismP1<K>& f,
                                     const ProjectivePoint<K>& p) {
  const std::size_t m = parametric_multiplicity(f, p);
  const auto gd = geometric_degree(f);
  if (m % gd.deg_g != 0) {
    throw Error(ErrorCode::NonIntegralRatio, "image_multiplicity",
                std::to_string(m) + " / " + std::to_string(gd.deg_g));
  }
  return {m / gd.deg_g, gd.deg_g};
}

}  // namespace strata
