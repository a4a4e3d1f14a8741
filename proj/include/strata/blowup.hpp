#pragma once

// Curves on the blow-up of P^n at finitely many points.
//
// A lifted curve is stored as its image in P^n together with one n-tuple
// per blown-up point: the P^{n-1} coordinates of the i-th blow-up, written
// in the chart where p_i has been moved to (1:0:...:0). Together these give
// a point of the fibered product Bl_{p_1} x_{P^n} ... x_{P^n} Bl_{p_r}.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strata/binary_form.hpp"
#include "strata/error.hpp"
#include "strata/field.hpp"
#include "strata/morphism.hpp"
#include "strata/projective.hpp"

namespace strata {

template <FieldScalar K>
class BlowupConfig {
 public:
  BlowupConfig(const FieldSpec& spec, std::size_t n,
               std::vector<ProjectivePoint<K>> points)
      : spec_(spec), n_(n), points_(std::move(points)) {
    if (n_ < 1) {
      throw Error(ErrorCode::DimensionMismatch, "blowup_config", "n must be >= 1");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      require_same_field(spec_, points_[i].spec(), "blowup_config");
      if (points_[i].dimension() != n_) {
        throw Error(ErrorCode::DimensionMismatch, "blowup_config",
                    "point " + std::to_string(i + 1) + " is not in P^" +
                        std::to_string(n_));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (points_[i] == points_[j]) {
          throw Error(ErrorCode::DuplicatePoint, "blowup_config",
                      "points " + std::to_string(j + 1) + " and " +
                          std::to_string(i + 1) + " coincide");
        }
      }
      moves_.push_back(move_to_e0(points_[i]));
    }
  }

  const FieldSpec& spec() const { return spec_; }
  std::size_t dimension() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjectivePoint<K>>& points() const { return points_; }
  const ProjectivePoint<K>& point(std::size_t i) const { return points_.at(i); }
  const ProjLinearMap<K>& move(std::size_t i) const { return moves_.at(i); }

  friend bool operator==(const BlowupConfig& a, const BlowupConfig& b) {
    return a.spec_ == b.spec_ && a.n_ == b.n_ && a.points_ == b.points_;
  }

 private:
  FieldSpec spec_;
  std::size_t n_;
  std::vector<ProjectivePoint<K>> points_;
  std::vector<ProjLinearMap<K>> moves_;
};

/// Marks a curve lying inside the exceptional divisor over point `index`.
struct ExceptionalBase {
  std::size_t index;
  friend auto operator<=>(const ExceptionalBase&, const ExceptionalBase&) = default;
};

template <FieldScalar K>
class LiftedMorphism {
 public:
  using Component = std::vector<BinaryForm<K>>;
  using Base = std::variant<MorphismP1<K>, ExceptionalBase>;

  /// Assemble a lifted curve from a base and per-point components, checking
  /// that each component is a normalized n-tuple compatible with the base.
  static LiftedMorphism pair(std::shared_ptr<const BlowupConfig<K>> config,
                             Base base, std::vector<Component> components);

  /// No invariant checks; for lift and exceptional_lift, which construct
  /// components that satisfy them.
  static LiftedMorphism assemble(std::shared_ptr<const BlowupConfig<K>> config,
                                 Base base, std::vector<Component> components) {
    return LiftedMorphism(std::move(config), std::move(base), std::move(components));
  }

  const BlowupConfig<K>& config() const { return *config_; }
  const std::shared_ptr<const BlowupConfig<K>>& config_ptr() const { return config_; }
  const Base& base() const { return base_; }
  bool is_exceptional() const { return std::holds_alternative<ExceptionalBase>(base_); }
  const MorphismP1<K>& base_morphism() const { return std::get<MorphismP1<K>>(base_); }
  std::size_t exceptional_index() const { return std::get<ExceptionalBase>(base_).index; }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }

  /// Common degree of the forms in component i (0 for a constant tuple).
  std::size_t component_degree(std::size_t i) const {
    for (const auto& g : components_.at(i)) {
      if (!g.is_zero()) return g.degree();
    }
    return 0;
  }

  friend bool operator==(const LiftedMorphism& a, const LiftedMorphism& b) {
    return *a.config_ == *b.config_ && a.base_ == b.base_ &&
           a.components_ == b.components_;
  }

 private:
  LiftedMorphism(std::shared_ptr<const BlowupConfig<K>> config, Base base,
                 std::vector<Component> components)
      : config_(std::move(config)),
        base_(std::move(base)),
        components_(std::move(components)) {}

  std::shared_ptr<const BlowupConfig<K>> config_;
  Base base_;
  std::vector<Component> components_;
};

namespace detail {

// (x_1 : ... : x_n) of the point p_from in the chart moving p_to to e_0,
// as a constant n-tuple. Nonzero because the points are distinct.
template <FieldScalar K>
std::vector<BinaryForm<K>> forced_component(const BlowupConfig<K>& config,
                                            std::size_t from, std::size_t to) {
  const auto moved = map_apply(config.move(to), config.point(from));
  std::vector<BinaryForm<K>> raw;
  for (std::size_t j = 1; j < moved.coords().size(); ++j) {
    raw.push_back(moved[j].is_zero() ? BinaryForm<K>::zero(config.spec())
                                     : BinaryForm<K>::constant(moved[j]));
  }
  return normalize_tuple<K>(raw, config.spec(), "lift").forms;
}

// F'_j G_k == F'_k G_j for all j, k in 1..n.
template <FieldScalar K>
bool compatible(const MorphismP1<K>& moved, const std::vector<BinaryForm<K>>& g) {
  const std::size_t n = g.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (moved.form(j + 1) * g[k] != moved.form(k + 1) * g[j]) return false;
    }
  }
  return true;
}

template <FieldScalar K>
bool is_normalized_tuple(const std::vector<BinaryForm<K>>& g, const FieldSpec& spec) {
  try {
    auto norm = normalize_tuple<K>(g, spec, "lift");
    return norm.forms == g && norm.common_factor.is_constant();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace detail

/// The strict transform of f: per point, move p_i to e_0, strip
/// H_i = gcd(F'_1..F'_n) and keep F'_j / H_i.
template <FieldScalar K>
LiftedMorphism<K> lift(const MorphismP1<K>& f,
                       std::shared_ptr<const BlowupConfig<K>> config) {
  const auto& cfg = *config;
  require_same_field(f.spec(), cfg.spec(), "lift");
  if (f.target_dimension() != cfg.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "lift");
  }
  std::vector<typename LiftedMorphism<K>::Component> components;
  components.reserve(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto moved = transform(f, cfg.move(i));
    const auto tail = std::span(moved.forms()).subspan(1);
    const bool at_point = std::all_of(tail.begin(), tail.end(),
                                      [](const auto& g) { return g.is_zero(); });
    if (at_point) {
      throw Error(ErrorCode::AmbiguousLift, "lift",
                  "constant morphism at blown-up point " + std::to_string(i + 1) +
                      " lifts to any point of its exceptional divisor");
    }
    components.push_back(normalize_tuple<K>(tail, cfg.spec(), "lift").forms);
  }
  return LiftedMorphism<K>::assemble(std::move(config), f, std::move(components));
}

template <FieldScalar K>
LiftedMorphism<K> lift(const MorphismP1<K>& f, const BlowupConfig<K>& config) {
  return lift(f, std::make_shared<const BlowupConfig<K>>(config));
}

template <FieldScalar K>
LiftedMorphism<K> LiftedMorphism<K>::pair(
    std::shared_ptr<const BlowupConfig<K>> config, Base base,
    std::vector<Component> components) {
  const auto& cfg = *config;
  const std::size_t n = cfg.dimension();
  if (components.size() != cfg.size()) {
    throw Error(ErrorCode::InvalidLift, "lift",
                "expected " + std::to_string(cfg.size()) + " components");
  }
  for (const auto& comp : components) {
    if (comp.size() != n || !detail::is_normalized_tuple(comp, cfg.spec())) {
      throw Error(ErrorCode::InvalidLift, "lift",
                  "component is not a normalized " + std::to_string(n) + "-tuple");
    }
  }
  if (const auto* e = std::get_if<ExceptionalBase>(&base)) {
    if (e->index >= cfg.size()) {
      throw Error(ErrorCode::InvalidLift, "lift", "exceptional index out of range");
    }
    for (std::size_t j = 0; j < cfg.size(); ++j) {
      if (j != e->index && components[j] != detail::forced_component(cfg, e->index, j)) {
        throw Error(ErrorCode::InvalidLift, "lift",
                    "component " + std::to_string(j + 1) +
                        " does not match the exceptional base");
      }
    }
  } else {
    const auto& f = std::get<MorphismP1<K>>(base);
    require_same_field(f.spec(), cfg.spec(), "lift");
    if (f.target_dimension() != n) throw Error(ErrorCode::DimensionMismatch, "lift");
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      const auto moved = transform(f, cfg.move(i));
      if (!detail::compatible(moved, components[i])) {
        throw Error(ErrorCode::InvalidLift, "lift",
                    "component " + std::to_string(i + 1) +
                        " violates F_j G_k = F_k G_j");
      }
    }
  }
  return LiftedMorphism(std::move(config), std::move(base), std::move(components));
}

/// A curve inside E_i, given by an n-tuple defining a map P^1 -> P^{n-1}.
template <FieldScalar K>
LiftedMorphism<K> exceptional_lift(std::size_t index,
                                   std::vector<BinaryForm<K>> forms,
                                   std::shared_ptr<const BlowupConfig<K>> config) {
  const auto& cfg = *config;
  if (cfg.dimension() < 2) {
    throw Error(ErrorCode::NoExceptionalCurves, "exceptional_lift",
                "E_i is a single point when n = 1");
  }
  if (index >= cfg.size()) {
    throw Error(ErrorCode::DimensionMismatch, "exceptional_lift",
                "no blown-up point " + std::to_string(index + 1));
  }
  if (forms.size() != cfg.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "exceptional_lift",
                "expected " + std::to_string(cfg.dimension()) + " forms");
  }
  auto norm = normalize_tuple<K>(forms, cfg.spec(), "exceptional_lift");
  if (norm.degree == 0) {
    throw Error(ErrorCode::ConstantExceptional, "exceptional_lift");
  }
  std::vector<typename LiftedMorphism<K>::Component> components;
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    components.push_back(j == index ? norm.forms
                                    : detail::forced_component(cfg, index, j));
  }
  return LiftedMorphism<K>::assemble(std::move(config), ExceptionalBase{index},
                        std::move(components));
}

/// sigma o g, or the constant map at p_i flagged as exceptional.
template <FieldScalar K>
struct Projection {
  MorphismP1<K> morphism;
  std::optional<std::size_t> exceptional_index;
};

template <FieldScalar K>
Projection<K> project_flagged(const LiftedMorphism<K>& g) {
  if (g.is_exceptional()) {
    const std::size_t i = g.exceptional_index();
    return {MorphismP1<K>::constant(g.config().point(i)), i};
  }
  return {g.base_morphism(), std::nullopt};
}

template <FieldScalar K>
MorphismP1<K> project(const LiftedMorphism<K>& g) {
  if (g.is_exceptional()) {
    throw Error(ErrorCode::ExceptionalCurve, "project",
                "curve lies in E_" + std::to_string(g.exceptional_index() + 1));
  }
  return g.base_morphism();
}

struct InteriorStratum {
  std::size_t degree;
  std::vector<std::size_t> multiplicities;
  friend auto operator<=>(const InteriorStratum&, const InteriorStratum&) = default;
};

struct ExceptionalStratum {
  std::size_t point_index;  // 0-based
  std::size_t degree;
  friend auto operator<=>(const ExceptionalStratum&, const ExceptionalStratum&) = default;
};

struct ConstantStratum {
  friend auto operator<=>(const ConstantStratum&, const ConstantStratum&) = default;
};

using StratumLabel = std::variant<InteriorStratum, ExceptionalStratum, ConstantStratum>;

/// Interior strata are read off the projection: its degree and its
/// parametric multiplicity at each p_i. Exceptional strata record which E_i
/// and the degree of the curve in it.
template <FieldScalar K>
StratumLabel stratum(const LiftedMorphism<K>& g) {
  if (g.is_exceptional()) {
    const std::size_t i = g.exceptional_index();
    return ExceptionalStratum{i, g.component_degree(i)};
  }
  const auto& f = g.base_morphism();
  if (f.is_constant()) return ConstantStratum{};
  InteriorStratum label{f.degree(), {}};
  for (const auto& p : g.config().points()) {
    label.multiplicities.push_back(parametric_multiplicity(f, p));
  }
  return label;
}

template <FieldScalar K>
struct LiftedValue {
  ProjectivePoint<K> base_point;
  std::vector<ProjectivePoint<K>> fiber_points;
};

/// Evaluate base and components at a, checking the blow-up incidence
/// x_j y_k = x_k y_j in every chart.
template <FieldScalar K>
LiftedValue<K> evaluate_lifted(const LiftedMorphism<K>& g,
                               const ProjectivePoint<K>& a) {
  const auto& cfg = g.config();
  detail::require_parameter(a, cfg.spec(), "evaluate_lifted");
  const auto base_point = g.is_exceptional()
                              ? cfg.point(g.exceptional_index())
                              : mor_eval(g.base_morphism(), a);
  std::vector<ProjectivePoint<K>> fibers;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    std::vector<K> values;
    for (const auto& form : g.component(i)) values.push_back(evaluate(form, a[0], a[1]));
    auto y = ProjectivePoint<K>::normalize(std::move(values));
    const auto x = map_apply(cfg.move(i), base_point);
    for (std::size_t j = 0; j < y.coords().size(); ++j) {
      for (std::size_t k = j + 1; k < y.coords().size(); ++k) {
        if (x[j + 1] * y[k] != x[k + 1] * y[j]) {
          throw Error(ErrorCode::IncidenceViolation, "evaluate_lifted",
                      "chart " + std::to_string(i + 1));
        }
      }
    }
    fibers.push_back(std::move(y));
  }
  return {base_point, std::move(fibers)};
}

struct DimensionBound {
  enum class Kind { Exact, UpperBound };
  Kind kind;
  std::size_t value;
  friend bool operator==(const DimensionBound&, const DimensionBound&) = default;
};

/// Mor_d(P^1, P^n) has dimension (n+1)(d+1)-1; M_{d,0} is open in it.
/// Strata with some m_i > 0 are only known to be strictly smaller.
inline DimensionBound stratum_dimension(const StratumLabel& label, std::size_t n) {
  if (const auto* in = std::get_if<InteriorStratum>(&label)) {
    const std::size_t full = (n + 1) * (in->degree + 1) - 1;
    const bool avoids = std::all_of(in->multiplicities.begin(),
                                    in->multiplicities.end(),
                                    [](std::size_t m) { return m == 0; });
    if (avoids) return {DimensionBound::Kind::Exact, full};
    return {DimensionBound::Kind::UpperBound, full - 1};
  }
  if (const auto* ex = std::get_if<ExceptionalStratum>(&label)) {
    // Mor_e(P^1, P^{n-1})
    return {DimensionBound::Kind::Exact, n * (ex->degree + 1) - 1};
  }
  throw Error(ErrorCode::ConstantLabel, "stratum_dimension");
}

}  // namespace strata
