#pragma once

// Exhaustive enumeration of Mor_d(P^1, P^n)(F_q) and per-stratum counts on
// the blow-up at a set of F_q-points.
//
// Coefficient tuples are indexed by a base-q integer whose most significant
// digit is the leading coefficient of F_0, so contiguous index ranges
// partition the leading-coefficient space. Each shard walks one range and
// keeps its own tallies; tallies merge by addition, verdicts by conjunction.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "strata/binary_form.hpp"
#include "strata/blowup.hpp"
#include "strata/error.hpp"
#include "strata/field.hpp"
#include "strata/morphism.hpp"
#include "strata/projective.hpp"
#include "strata/text.hpp"

namespace strata {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

/// q^((n+1)(d+1)), or BudgetExceeded if that exceeds the budget.
inline std::uint64_t raw_tuple_count(std::size_t n, std::size_t d, std::uint64_t q,
                                     std::uint64_t budget = kDefaultBudget) {
  const std::size_t digits = (n + 1) * (d + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (total > budget / q) {
      throw Error(ErrorCode::BudgetExceeded, "enumerate_morphisms",
                  std::to_string(q) + "^" + std::to_string(digits) +
                      " raw tuples exceed the budget of " + std::to_string(budget));
    }
    total *= q;
  }
  if (total > budget) {
    throw Error(ErrorCode::BudgetExceeded, "enumerate_morphisms",
                std::to_string(total) + " raw tuples exceed the budget of " +
                    std::to_string(budget));
  }
  return total;
}

/// Streams the canonical representatives of Mor_d(P^1, P^n)(F_q) whose raw
/// index lies in [begin, end). Degree-0 tuples (constants) are produced only
/// when include_constants is set.
class MorphismEnumerator {
 public:
  MorphismEnumerator(std::size_t n, std::size_t d, std::uint64_t q,
                     std::uint64_t begin, std::uint64_t end,
                     bool include_constants = false)
      : spec_(FieldSpec::prime(q)),
        n_(n),
        d_(d),
        q_(q),
        next_(begin),
        end_(end),
        include_constants_(include_constants),
        digits_((n + 1) * (d + 1), 0) {
    std::uint64_t rest = begin;
    for (std::size_t k = digits_.size(); k-- > 0;) {
      digits_[k] = rest % q_;
      rest /= q_;
    }
  }

  /// Raw index of the tuple most recently returned by next().
  std::uint64_t last_index() const { return last_; }

  std::optional<MorphismP1<Modular>> next() {
    while (next_ < end_) {
      last_ = next_;
      auto candidate = current();
      advance();
      if (candidate) return candidate;
    }
    return std::nullopt;
  }

 private:
  std::optional<MorphismP1<Modular>> current() const {
    auto lead = std::find_if(digits_.begin(), digits_.end(),
                             [](std::uint64_t x) { return x != 0; });
    if (lead == digits_.end() || *lead != 1) return std::nullopt;
    if (d_ == 0 && !include_constants_) return std::nullopt;

    std::vector<BinaryForm<Modular>> forms;
    forms.reserve(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) {
      std::vector<Modular> coeffs;
      coeffs.reserve(d_ + 1);
      for (std::size_t j = 0; j <= d_; ++j) {
        coeffs.emplace_back(q_, digits_[i * (d_ + 1) + j]);
      }
      forms.push_back(BinaryForm<Modular>::from_coefficients(spec_, std::move(coeffs)));
    }
    if (!collective_gcd<Modular>(forms, spec_).is_constant()) return std::nullopt;
    return MorphismP1<Modular>::normalize(std::move(forms));
  }

  void advance() {
    ++next_;
    for (std::size_t k = digits_.size(); k-- > 0;) {
      if (++digits_[k] < q_) return;
      digits_[k] = 0;
    }
  }

  FieldSpec spec_;
  std::size_t n_;
  std::size_t d_;
  std::uint64_t q_;
  std::uint64_t next_;
  std::uint64_t end_;
  std::uint64_t last_ = 0;
  bool include_constants_;
  std::vector<std::uint64_t> digits_;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  bool include_constants = false;
};

/// Visit every element of Mor_d(P^1, P^n)(F_q) once, in index order.
template <class Visitor>
void for_each_morphism(std::size_t n, std::size_t d, std::uint64_t q,
                       const EnumerationOptions& opts, Visitor&& visit) {
  if (!is_prime(q)) {
    throw Error(ErrorCode::NonPrimeField, "enumerate_morphisms",
                std::to_string(q) + " is not prime");
  }
  const std::uint64_t total = raw_tuple_count(n, d, q, opts.budget);
  MorphismEnumerator it(n, d, q, 0, total, opts.include_constants);
  while (auto f = it.next()) visit(*f);
}

inline std::vector<MorphismP1<Modular>> enumerate_morphisms(
    std::size_t n, std::size_t d, std::uint64_t q,
    const EnumerationOptions& opts = {}) {
  std::vector<MorphismP1<Modular>> out;
  for_each_morphism(n, d, q, opts, [&](const MorphismP1<Modular>& f) {
    out.push_back(f);
  });
  return out;
}

struct Verdicts {
  bool disjoint = true;
  bool exhaustive = true;
  bool lift_unique = true;
  bool round_trip = true;
  bool degree_law = true;
  bool incidence = true;
  bool multiplicativity = true;

  bool all() const {
    return disjoint && exhaustive && lift_unique && round_trip && degree_law &&
           incidence && multiplicativity;
  }

  Verdicts& operator&=(const Verdicts& o) {
    disjoint = disjoint && o.disjoint;
    exhaustive = exhaustive && o.exhaustive;
    lift_unique = lift_unique && o.lift_unique;
    round_trip = round_trip && o.round_trip;
    degree_law = degree_law && o.degree_law;
    incidence = incidence && o.incidence;
    multiplicativity = multiplicativity && o.multiplicativity;
    return *this;
  }
};

struct CensusOptions {
  std::uint64_t budget = kDefaultBudget;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t shards = 0;
  std::size_t max_exceptional_degree = 3;
  /// Roughly this many morphisms get the squaring-reparametrization check.
  std::uint64_t multiplicativity_sample = 100;
  /// Distinctness of lifts is checked directly (by storing every lift) only
  /// when the raw space is at most this large.
  std::uint64_t injectivity_limit = 5'000'000;
};

struct CensusReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t q = 0;
  std::vector<ProjectivePoint<Modular>> points;

  std::uint64_t total_count = 0;
  std::map<InteriorStratum, std::uint64_t> strata;
  std::map<ExceptionalStratum, std::uint64_t> exceptional;
  Verdicts verdicts;
  /// First failing morphism (lowest raw index) with the reason.
  std::optional<std::string> counterexample;

  bool injectivity_checked = false;
  std::uint64_t multiplicativity_samples = 0;
  std::chrono::duration<double> elapsed{};

  std::uint64_t strata_sum() const {
    std::uint64_t s = 0;
    for (const auto& [label, count] : strata) s += count;
    return s;
  }

  std::uint64_t count(const std::vector<std::size_t>& m) const {
    auto it = strata.find(InteriorStratum{d, m});
    return it == strata.end() ? 0 : it->second;
  }
};

namespace detail {

struct ShardTally {
  std::uint64_t total = 0;
  std::map<InteriorStratum, std::uint64_t> strata;
  Verdicts verdicts;
  std::optional<std::pair<std::uint64_t, std::string>> counterexample;
  std::vector<std::string> lift_keys;
  std::uint64_t samples = 0;

  void fail(bool Verdicts::*which, std::uint64_t index, const std::string& why) {
    verdicts.*which = false;
    if (!counterexample || index < counterexample->first) {
      counterexample = {index, why};
    }
  }
};

inline std::string lift_key(const LiftedMorphism<Modular>& g) {
  std::string key = render(g.base_morphism());
  for (const auto& comp : g.components()) {
    key += "|";
    for (const auto& form : comp) key += render(form) + ",";
  }
  return key;
}

inline ShardTally census_shard(std::size_t n, std::size_t d, std::uint64_t q,
                               std::uint64_t begin, std::uint64_t end,
                               const std::shared_ptr<const BlowupConfig<Modular>>& config,
                               std::uint64_t sample_stride, bool keep_keys) {
  const FieldSpec spec = config->spec();
  const auto params = sample_parameters<Modular>(spec, 1);
  const auto squaring = MorphismP1<Modular>::normalize(
      {pow(BinaryForm<Modular>::u(spec), 2), pow(BinaryForm<Modular>::v(spec), 2)});
  const std::size_t r = config->size();

  ShardTally tally;
  MorphismEnumerator it(n, d, q, begin, end);
  while (auto next = it.next()) {
    const auto& f = *next;
    const std::uint64_t index = it.last_index();
    const std::string name = render(f);
    ++tally.total;

    std::optional<LiftedMorphism<Modular>> g;
    try {
      g = lift(f, config);
    } catch (const Error& e) {
      tally.fail(&Verdicts::lift_unique, index, name + ": lift failed: " + e.what());
      tally.verdicts.exhaustive = false;
      continue;
    }
    if (project(*g) != f) {
      tally.fail(&Verdicts::round_trip, index, name + ": project(lift(f)) != f");
    }

    const StratumLabel label = stratum(*g);
    const auto* interior = std::get_if<InteriorStratum>(&label);
    if (interior == nullptr || interior->degree != d ||
        interior->multiplicities.size() != r) {
      tally.fail(&Verdicts::disjoint, index, name + ": not an interior label of degree d");
      tally.verdicts.exhaustive = false;
      continue;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t m = interior->multiplicities[i];
      if (m > d) {
        tally.fail(&Verdicts::disjoint, index,
                   name + ": m_" + std::to_string(i + 1) + " exceeds d");
      }
      if (g->component_degree(i) + m != d) {
        tally.fail(&Verdicts::degree_law, index,
                   name + ": deg G^(" + std::to_string(i + 1) + ") != d - m");
      }
    }
    ++tally.strata[*interior];

    for (const auto& a : params) {
      try {
        evaluate_lifted(*g, a);
      } catch (const Error& e) {
        tally.fail(&Verdicts::incidence, index, name + ": " + e.what());
        break;
      }
    }

    if (keep_keys) tally.lift_keys.push_back(lift_key(*g));

    if (index % sample_stride == 0) {
      ++tally.samples;
      const auto doubled = reparametrize(f, squaring);
      bool ok = doubled.degree() == 2 * d;
      for (std::size_t i = 0; ok && i < r; ++i) {
        ok = parametric_multiplicity(doubled, config->point(i)) ==
             2 * interior->multiplicities[i];
      }
      if (!ok) {
        tally.fail(&Verdicts::multiplicativity, index,
                   name + ": squaring did not double degree and multiplicities");
      }
    }
  }
  return tally;
}

}  // namespace detail

/// Lift and classify every element of Mor_d(P^1, P^n)(F_q); also count
/// curves of degree 1..max_exceptional_degree inside each E_i.
inline CensusReport census_strata(std::size_t n, std::size_t d, std::uint64_t q,
                                  std::vector<ProjectivePoint<Modular>> points,
                                  const CensusOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_prime(q)) {
    throw Error(ErrorCode::NonPrimeField, "census_strata", std::to_string(q) + " is not prime");
  }
  if (d == 0) {
    throw Error(ErrorCode::ConstantMorphism, "census_strata", "d must be positive");
  }
  const FieldSpec spec = FieldSpec::prime(q);
  auto config = std::make_shared<const BlowupConfig<Modular>>(spec, n, points);
  const std::uint64_t raw = raw_tuple_count(n, d, q, opts.budget);

  CensusReport report;
  report.n = n;
  report.d = d;
  report.q = q;
  report.points = std::move(points);
  report.injectivity_checked = raw <= opts.injectivity_limit;

  std::size_t shards = opts.shards;
  if (shards == 0) shards = std::max(1u, std::thread::hardware_concurrency());
  shards = static_cast<std::size_t>(std::min<std::uint64_t>(shards, raw));
  const std::uint64_t stride =
      std::max<std::uint64_t>(1, raw / std::max<std::uint64_t>(1, opts.multiplicativity_sample));

  std::vector<std::future<detail::ShardTally>> futures;
  for (std::size_t s = 0; s < shards; ++s) {
    const std::uint64_t begin = raw * s / shards;
    const std::uint64_t end = raw * (s + 1) / shards;
    futures.push_back(std::async(std::launch::async, detail::census_shard, n, d, q,
                                 begin, end, config, stride,
                                 report.injectivity_checked));
  }

  std::optional<std::pair<std::uint64_t, std::string>> first_failure;
  std::set<std::string> keys;
  for (auto& fut : futures) {
    auto tally = fut.get();
    report.total_count += tally.total;
    for (const auto& [label, count] : tally.strata) report.strata[label] += count;
    report.verdicts &= tally.verdicts;
    report.multiplicativity_samples += tally.samples;
    if (tally.counterexample &&
        (!first_failure || tally.counterexample->first < first_failure->first)) {
      first_failure = tally.counterexample;
    }
    keys.insert(std::make_move_iterator(tally.lift_keys.begin()),
                std::make_move_iterator(tally.lift_keys.end()));
  }
  if (report.injectivity_checked && keys.size() != report.total_count) {
    report.verdicts.lift_unique = false;
    if (!first_failure) first_failure = {raw, "two morphisms share a lift"};
  }
  if (report.strata_sum() != report.total_count) {
    report.verdicts.exhaustive = false;
    if (!first_failure) first_failure = {raw, "stratum counts do not sum to the total"};
  }
  if (first_failure) report.counterexample = first_failure->second;

  if (n >= 2) {
    for (std::size_t e = 1; e <= opts.max_exceptional_degree; ++e) {
      for_each_morphism(n - 1, e, q, {opts.budget, false}, [&](const MorphismP1<Modular>& h) {
        for (std::size_t i = 0; i < config->size(); ++i) {
          const auto g = exceptional_lift(i, h.forms(), config);
          const auto label = stratum(g);
          const auto* ex = std::get_if<ExceptionalStratum>(&label);
          if (ex == nullptr || ex->point_index != i || ex->degree != e) {
            report.verdicts.disjoint = false;
            if (!report.counterexample) {
              report.counterexample = render(h) + ": exceptional curve mislabelled";
            }
            continue;
          }
          ++report.exceptional[*ex];
        }
      });
    }
  }

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// Verdicts on the partition: every morphism lands in exactly one interior
/// stratum, lifts exist, are distinct and project back, the component
/// degrees obey deg G^(i) = d - m_i, and the strata counts add up.
struct PartitionVerdict {
  Verdicts verdicts;
  bool count_identity = false;
  std::uint64_t total_count = 0;
  std::uint64_t strata_sum = 0;
  std::optional<std::string> counterexample;

  bool all() const { return verdicts.all() && count_identity; }
};

inline PartitionVerdict verify_partition(const CensusReport& report) {
  PartitionVerdict v;
  v.verdicts = report.verdicts;
  v.total_count = report.total_count;
  v.strata_sum = report.strata_sum();
  v.count_identity = v.total_count == v.strata_sum;
  v.counterexample = report.counterexample;
  return v;
}

inline PartitionVerdict verify_partition(std::size_t n, std::size_t d, std::uint64_t q,
                                         std::vector<ProjectivePoint<Modular>> points,
                                         const CensusOptions& opts = {}) {
  return verify_partition(census_strata(n, d, q, std::move(points), opts));
}

/// Slope of log N(q) against log q over the two largest primes, rounded.
/// A soft diagnostic: lower-order terms of the point count perturb it.
inline long long estimate_dimension(const std::map<std::uint64_t, std::uint64_t>& counts) {
  if (counts.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "estimate_dimension",
                "need counts at two or more primes");
  }
  for (const auto& [q, count] : counts) {
    if (count == 0) {
      throw Error(ErrorCode::ZeroCount, "estimate_dimension",
                  "zero count at q = " + std::to_string(q));
    }
  }
  const auto hi = std::prev(counts.end());
  const auto lo = std::prev(hi);
  const double slope = std::log(static_cast<double>(hi->second) / static_cast<double>(lo->second)) /
                       std::log(static_cast<double>(hi->first) / static_cast<double>(lo->first));
  return std::llround(slope);
}

}  // namespace strata
