#pragma once

// Structured records (JSON, insertion-ordered keys) and CSV strata tables.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <variant>

#include "strata/blowup.hpp"
#include "strata/census.hpp"
#include "strata/field.hpp"
#include "strata/text.hpp"

namespace strata {

using Json = nlohmann::ordered_json;

inline Json to_json(const StratumLabel& label) {
  Json out;
  if (const auto* in = std::get_if<InteriorStratum>(&label)) {
    out["kind"] = "interior";
    out["d"] = in->degree;
    out["m"] = in->multiplicities;
  } else if (const auto* ex = std::get_if<ExceptionalStratum>(&label)) {
    out["kind"] = "exceptional";
    out["i"] = ex->point_index + 1;
    out["e"] = ex->degree;
  } else {
    out["kind"] = "constant";
  }
  return out;
}

inline Json to_json(const DimensionBound& dim) {
  Json out;
  out["kind"] = dim.kind == DimensionBound::Kind::Exact ? "exact" : "upper_bound";
  out["value"] = dim.value;
  return out;
}

template <FieldScalar K>
Json components_json(const LiftedMorphism<K>& g) {
  Json comps = Json::array();
  for (const auto& comp : g.components()) {
    Json forms = Json::array();
    for (const auto& form : comp) forms.push_back(render(form));
    comps.push_back(std::move(forms));
  }
  return comps;
}

template <FieldScalar K>
Json to_json(const LiftedMorphism<K>& g) {
  Json out;
  if (g.is_exceptional()) {
    out["base"] = Json{{"exceptional", g.exceptional_index() + 1}};
  } else {
    out["base"] = render(g.base_morphism());
  }
  out["components"] = components_json(g);
  Json degrees = Json::array();
  for (std::size_t i = 0; i < g.components().size(); ++i) {
    degrees.push_back(g.component_degree(i));
  }
  out["component_degrees"] = std::move(degrees);
  return out;
}

inline Json to_json(const Verdicts& v) {
  return Json{{"disjoint", v.disjoint},
              {"exhaustive", v.exhaustive},
              {"lift_unique", v.lift_unique},
              {"round_trip", v.round_trip},
              {"degree_law", v.degree_law},
              {"incidence", v.incidence},
              {"multiplicativity", v.multiplicativity}};
}

/// The census as a record. Timing is left out so identical runs serialize
/// identically.
inline Json to_json(const CensusReport& report) {
  Json out;
  out["command"] = "census";
  out["field"] = "F" + std::to_string(report.q);
  out["n"] = report.n;
  out["d"] = report.d;
  Json points = Json::array();
  for (const auto& p : report.points) points.push_back(render(p));
  out["points"] = std::move(points);
  out["total"] = report.total_count;
  Json strata = Json::array();
  for (const auto& [label, count] : report.strata) {
    strata.push_back(Json{{"m", label.multiplicities}, {"count", count}});
  }
  out["strata"] = std::move(strata);
  Json exceptional = Json::array();
  for (const auto& [label, count] : report.exceptional) {
    exceptional.push_back(
        Json{{"i", label.point_index + 1}, {"e", label.degree}, {"count", count}});
  }
  out["exceptional"] = std::move(exceptional);
  out["verdicts"] = to_json(report.verdicts);
  out["counterexample"] =
      report.counterexample ? Json(*report.counterexample) : Json(nullptr);
  return out;
}

inline Json to_json(const PartitionVerdict& v) {
  Json out;
  out["verdicts"] = to_json(v.verdicts);
  out["count_identity"] = v.count_identity;
  out["total"] = v.total_count;
  out["strata_sum"] = v.strata_sum;
  out["counterexample"] = v.counterexample ? Json(*v.counterexample) : Json(nullptr);
  return out;
}

/// Columns d, m_1..m_r, count.
inline std::string strata_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "d";
  for (std::size_t i = 0; i < report.points.size(); ++i) out << ",m_" << i + 1;
  out << ",count\n";
  for (const auto& [label, count] : report.strata) {
    out << label.degree;
    for (std::size_t m : label.multiplicities) out << ',' << m;
    out << ',' << count << '\n';
  }
  return out.str();
}

}  // namespace strata
