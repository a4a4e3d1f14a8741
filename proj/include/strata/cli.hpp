#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage or
// parse error, 3 failed verification verdict.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "strata/blowup.hpp"
#include "strata/census.hpp"
#include "strata/error.hpp"
#include "strata/field.hpp"
#include "strata/morphism.hpp"
#include "strata/serialize.hpp"
#include "strata/text.hpp"

namespace strata::cli {

enum class OutputFormat { Human, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

struct CommandConfig {
  std::string command;
  FieldSpec field = FieldSpec::rationals();
  std::string map_text;
  std::string points_text;
  std::optional<std::size_t> n;
  std::optional<std::size_t> d;
  std::vector<std::size_t> m;
  std::optional<std::size_t> exceptional;          // 1-based point index
  std::optional<std::size_t> exceptional_degree;   // for dims
  std::vector<std::uint64_t> primes;
  OutputFormat output = OutputFormat::Human;
  std::size_t shards = 0;
  std::size_t max_exceptional_degree = 3;
  std::uint64_t budget = kDefaultBudget;
};

/// "Q" or "F<p>".
inline FieldSpec parse_field(const std::string& text) {
  if (text == "Q" || text == "q") return FieldSpec::rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    const std::string digits = text.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 10) {
      return FieldSpec::prime(std::stoull(digits));
    }
  }
  throw Error(ErrorCode::NonPrimeField, "field", "expected Q or F<p>, got '" + text + "'");
}

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

inline void emit(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

template <FieldScalar K>
std::vector<ProjectivePoint<K>> points_of(const CommandConfig& cfg) {
  return parse_point_list<K>(cfg.points_text, cfg.field);
}

template <FieldScalar K>
MorphismP1<K> map_of(const CommandConfig& cfg, std::ostream& err) {
  require(!cfg.map_text.empty(), cfg.command + " requires --map");
  auto parsed = parse_morphism<K>(cfg.map_text, cfg.field);
  if (parsed.stripped()) {
    err << "note: stripped common factor " << render(parsed.stripped_factor) << " from "
        << cfg.map_text << '\n';
  }
  return std::move(parsed.morphism);
}

template <FieldScalar K>
LiftedMorphism<K> lifted_of(const CommandConfig& cfg, std::ostream& err) {
  auto points = points_of<K>(cfg);
  require(!points.empty(), cfg.command + " requires --points");
  const std::size_t n = points.front().dimension();
  auto config = std::make_shared<const BlowupConfig<K>>(cfg.field, n, std::move(points));
  auto f = map_of<K>(cfg, err);
  if (cfg.exceptional) {
    require(*cfg.exceptional >= 1, "--exceptional is 1-based");
    return exceptional_lift(*cfg.exceptional - 1, f.forms(), config);
  }
  return lift(f, config);
}

template <FieldScalar K>
int run_multiplicity(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto f = map_of<K>(cfg, err);
  const auto points = points_of<K>(cfg);
  require(!points.empty(), "multiplicity requires --points");
  Json results = Json::array();
  for (const auto& p : points) {
    const auto membership = image_contains(f, p);
    results.push_back(Json{{"point", render(p)},
                           {"multiplicity", membership.multiplicity},
                           {"in_image", membership.contains}});
  }
  if (cfg.output == OutputFormat::Json) {
    emit(out, Json{{"command", "multiplicity"},
                   {"map", render(f)},
                   {"degree", f.degree()},
                   {"results", results}});
  } else {
    out << "map " << render(f) << " of degree " << f.degree() << '\n';
    for (const auto& r : results) {
      out << "  m_" << r["point"].get<std::string>() << " = " << r["multiplicity"].get<std::size_t>()
          << (r["in_image"].get<bool>() ? "  (on the image over the algebraic closure)" : "")
          << '\n';
    }
  }
  return kExitOk;
}

template <FieldScalar K>
int run_lift(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto g = lifted_of<K>(cfg, err);
  if (cfg.output == OutputFormat::Json) {
    Json record{{"command", "lift"}};
    record.update(to_json(g));
    emit(out, record);
    return kExitOk;
  }
  if (g.is_exceptional()) {
    out << "curve inside E_" << g.exceptional_index() + 1 << '\n';
  } else {
    out << "base " << render(g.base_morphism()) << '\n';
  }
  for (std::size_t i = 0; i < g.components().size(); ++i) {
    out << "  G^(" << i + 1 << ") = (";
    for (std::size_t j = 0; j < g.component(i).size(); ++j) {
      out << (j ? " : " : "") << render(g.component(i)[j]);
    }
    out << ")  degree " << g.component_degree(i) << '\n';
  }
  return kExitOk;
}

inline std::string describe(const StratumLabel& label) {
  if (const auto* in = std::get_if<InteriorStratum>(&label)) {
    std::string s = "M_{" + std::to_string(in->degree) + ",(";
    for (std::size_t i = 0; i < in->multiplicities.size(); ++i) {
      s += (i ? "," : "") + std::to_string(in->multiplicities[i]);
    }
    return s + ")}";
  }
  if (const auto* ex = std::get_if<ExceptionalStratum>(&label)) {
    return "Mor_" + std::to_string(ex->degree) + "(P^1, E_" +
           std::to_string(ex->point_index + 1) + ")";
  }
  return "constant";
}

template <FieldScalar K>
int run_classify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto g = lifted_of<K>(cfg, err);
  const auto label = stratum(g);
  if (cfg.output == OutputFormat::Json) {
    emit(out, Json{{"stratum", to_json(label)}, {"components", components_json(g)}});
  } else {
    out << "stratum " << describe(label) << '\n';
  }
  return kExitOk;
}

template <FieldScalar K>
int run_geometric_degree(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto f = map_of<K>(cfg, err);
  const auto gd = geometric_degree(f);
  Json record{{"command", "geometric-degree"},
              {"map", render(f)},
              {"degree", f.degree()},
              {"deg_g", gd.deg_g},
              {"deg_image", gd.deg_image}};
  Json mults = Json::array();
  for (const auto& p : points_of<K>(cfg)) {
    mults.push_back(Json{{"point", render(p)}, {"mu", image_multiplicity(f, p).multiplicity}});
  }
  if (!mults.empty()) record["image_multiplicities"] = mults;
  if (cfg.output == OutputFormat::Json) {
    emit(out, record);
  } else {
    out << "deg(f) = " << f.degree() << " = deg(g) " << gd.deg_g << " * deg(C) "
        << gd.deg_image << '\n';
    for (const auto& m : mults) {
      out << "  mu_" << m["point"].get<std::string>() << "(C) = " << m["mu"].get<std::size_t>()
          << '\n';
    }
  }
  return kExitOk;
}

inline CensusOptions census_options(const CommandConfig& cfg) {
  CensusOptions opts;
  opts.budget = cfg.budget;
  opts.shards = cfg.shards;
  opts.max_exceptional_degree = cfg.max_exceptional_degree;
  return opts;
}

inline void require_census_params(const CommandConfig& cfg) {
  require(!cfg.field.is_rationals(), cfg.command + " enumerates over F<p>; pass --field F<p>");
  require(cfg.n.has_value() && cfg.d.has_value(), cfg.command + " requires --n and --d");
  require(*cfg.d >= 1, "--d must be positive");
}

inline int run_census(const CommandConfig& cfg, std::ostream& out) {
  require_census_params(cfg);
  const auto report = census_strata(*cfg.n, *cfg.d, cfg.field.characteristic,
                                    points_of<Modular>(cfg), census_options(cfg));
  switch (cfg.output) {
    case OutputFormat::Json:
      emit(out, to_json(report));
      break;
    case OutputFormat::Csv:
      out << strata_csv(report);
      break;
    case OutputFormat::Human: {
      out << "Mor_" << report.d << "(P^1, P^" << report.n << ")(F_" << report.q
          << "): " << report.total_count << " morphisms\n";
      for (const auto& [label, count] : report.strata) {
        out << "  " << describe(label) << ": " << count << '\n';
      }
      for (const auto& [label, count] : report.exceptional) {
        out << "  " << describe(label) << ": " << count << '\n';
      }
      const Json v = to_json(report.verdicts);
      for (const auto& [name, ok] : v.items()) {
        out << "  " << name << ": " << (ok.get<bool>() ? "ok" : "FAILED") << '\n';
      }
      if (report.counterexample) out << "  counterexample: " << *report.counterexample << '\n';
      out << "  elapsed: " << report.elapsed.count() << " s\n";
    }
  }
  return report.verdicts.all() ? kExitOk : kExitVerification;
}

inline int run_verify(const CommandConfig& cfg, std::ostream& out) {
  require_census_params(cfg);
  require(cfg.output != OutputFormat::Csv, "verify has no CSV output");
  Json runs = Json::array();
  bool all = true;
  for (std::size_t d = 1; d <= *cfg.d; ++d) {
    const auto v = verify_partition(*cfg.n, d, cfg.field.characteristic,
                                    points_of<Modular>(cfg), census_options(cfg));
    all = all && v.all();
    Json run{{"d", d}};
    run.update(to_json(v));
    runs.push_back(std::move(run));
    if (cfg.output == OutputFormat::Human) {
      out << "d = " << d << ": " << (v.all() ? "all verdicts hold" : "FAILED") << " ("
          << v.strata_sum << " / " << v.total_count << " classified)\n";
      if (v.counterexample) out << "  counterexample: " << *v.counterexample << '\n';
    }
  }
  if (cfg.output == OutputFormat::Json) {
    emit(out, Json{{"command", "verify"},
                   {"field", cfg.field.name()},
                   {"n", *cfg.n},
                   {"runs", runs},
                   {"all", all}});
  }
  return all ? kExitOk : kExitVerification;
}

inline int run_dims(const CommandConfig& cfg, std::ostream& out) {
  require(cfg.n.has_value(), "dims requires --n");
  const std::size_t n = *cfg.n;
  // one multiplicity per point; absent --m means the stratum avoiding them
  const std::size_t r = std::count(cfg.points_text.begin(), cfg.points_text.end(), '(');
  const std::vector<std::size_t> zero(r, 0);
  StratumLabel label;
  if (cfg.exceptional_degree) {
    label = ExceptionalStratum{cfg.exceptional.value_or(1) - 1, *cfg.exceptional_degree};
  } else {
    require(cfg.d.has_value(), "dims requires --d or --exceptional-degree");
    label = InteriorStratum{*cfg.d, cfg.m.empty() ? zero : cfg.m};
  }
  const auto bound = stratum_dimension(label, n);
  Json record{{"command", "dims"}, {"n", n}, {"stratum", to_json(label)},
              {"dimension", to_json(bound)}};

  Json estimates = Json::array();
  if (!cfg.primes.empty()) {
    require(cfg.d.has_value() && !cfg.exceptional_degree, "estimates need an interior stratum");
    std::map<std::vector<std::size_t>, std::map<std::uint64_t, std::uint64_t>> counts;
    for (std::uint64_t q : cfg.primes) {
      CommandConfig at_q = cfg;
      at_q.field = FieldSpec::prime(q);
      const auto report = census_strata(n, *cfg.d, q, points_of<Modular>(at_q),
                                        census_options(cfg));
      for (const auto& [lab, count] : report.strata) counts[lab.multiplicities][q] = count;
      counts[zero][q] += 0;
    }
    for (auto& [m, by_q] : counts) {
      for (std::uint64_t q : cfg.primes) by_q[q] += 0;
      Json entry{{"m", m}};
      Json per_q = Json::object();
      for (const auto& [q, c] : by_q) per_q[std::to_string(q)] = c;
      entry["counts"] = per_q;
      try {
        entry["estimate"] = estimate_dimension(by_q);
      } catch (const Error&) {
        entry["estimate"] = nullptr;
      }
      entry["formula"] = to_json(stratum_dimension(InteriorStratum{*cfg.d, m}, n));
      estimates.push_back(std::move(entry));
    }
    record["estimates"] = estimates;
  }

  if (cfg.output == OutputFormat::Json) {
    emit(out, record);
  } else {
    out << describe(label) << " in P^" << n << ": dimension "
        << (bound.kind == DimensionBound::Kind::Exact ? "= " : "<= ") << bound.value << '\n';
    for (const auto& e : estimates) {
      out << "  m = " << e["m"].dump() << ": counts " << e["counts"].dump() << ", estimate "
          << e["estimate"].dump() << ", formula " << e["formula"]["value"].get<std::size_t>()
          << '\n';
    }
  }
  return kExitOk;
}

template <FieldScalar K>
int dispatch_field(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "multiplicity") return run_multiplicity<K>(cfg, out, err);
  if (cfg.command == "lift") return run_lift<K>(cfg, out, err);
  if (cfg.command == "classify") return run_classify<K>(cfg, out, err);
  if (cfg.command == "geometric-degree") return run_geometric_degree<K>(cfg, out, err);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace detail

inline int run_command(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    detail::require(cfg.output != OutputFormat::Csv || cfg.command == "census",
                    "CSV output is only available for census");
    if (cfg.command == "census") return detail::run_census(cfg, out);
    if (cfg.command == "verify") return detail::run_verify(cfg, out);
    if (cfg.command == "dims") return detail::run_dims(cfg, out);
    if (cfg.field.is_rationals()) return detail::dispatch_field<Rational>(cfg, out, err);
    return detail::dispatch_field<Modular>(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (cfg.output == OutputFormat::Json) {
      detail::emit(out, Json{{"error",
                              {{"operation", e.operation()},
                               {"kind", code_name(e.code())},
                               {"message", e.detail()}}}});
    }
    return is_usage_error(e.code()) ? kExitUsage : kExitDomain;
  } catch (const detail::UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
}

/// Parse argv (flags or their STRATA_* environment equivalents) and run.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational curves on blow-ups of projective space at points", "strata"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  CommandConfig cfg;
  std::string field_text = "Q";
  std::string output_text = "human";
  std::size_t n = 0, d = 0, exceptional = 0, exceptional_degree = 0;

  app.add_option("--field", field_text, "Q or F<p>")->envname("STRATA_FIELD");
  app.add_option("--map", cfg.map_text, "morphism \"(F_0 : ... : F_n)\"");
  app.add_option("--points", cfg.points_text, "blown-up points \"(1:0:0),(0:1:0)\"");
  auto* n_opt = app.add_option("--n", n, "target dimension");
  auto* d_opt = app.add_option("--d", d, "degree (verify: maximum degree)");
  app.add_option("--m", cfg.m, "multiplicities for dims, comma separated")->delimiter(',');
  auto* ex_opt = app.add_option("--exceptional", exceptional,
                                "treat --map as a curve inside E_i (1-based)");
  auto* exd_opt = app.add_option("--exceptional-degree", exceptional_degree,
                                 "dims: degree of a curve in E_i");
  app.add_option("--primes", cfg.primes, "dims: primes for count-based estimates")
      ->delimiter(',');
  app.add_option("--output", output_text, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->envname("STRATA_OUTPUT");
  app.add_option("--shards", cfg.shards, "census worker count (0 = hardware)")
      ->envname("STRATA_SHARDS");
  app.add_option("--max-exceptional-degree", cfg.max_exceptional_degree)
      ->envname("STRATA_MAX_EXCEPTIONAL_DEGREE");
  app.add_option("--budget", cfg.budget, "largest raw tuple space to enumerate")
      ->envname("STRATA_BUDGET");

  for (const char* name : {"multiplicity", "lift", "classify", "geometric-degree", "census",
                           "verify", "dims"}) {
    app.add_subcommand(name)->callback([&cfg, name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.field = parse_field(field_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.output = output_text == "json"  ? OutputFormat::Json
               : output_text == "csv" ? OutputFormat::Csv
                                      : OutputFormat::Human;
  if (*n_opt) cfg.n = n;
  if (*d_opt) cfg.d = d;
  if (*ex_opt) cfg.exceptional = exceptional;
  if (*exd_opt) cfg.exceptional_degree = exceptional_degree;
  return run_command(cfg, out, err);
}

}  // namespace strata::cli
