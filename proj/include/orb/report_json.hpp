#ifndef ORB_REPORT_JSON_HPP_
#define ORB_REPORT_JSON_HPP_

// JSON views of reports. The cohomology value object is schema-pinned:
// {"degree": n, "coefficients": "Zu"|"F2"|"Z", "free_rank": r, "torsion": [..]}.

#include <json.hpp>

#include "orb/census.hpp"

namespace orb {

using nlohmann::json;

inline json abelian_json(const AbelianGroup& g) {
  return json{{"free_rank", g.free_rank}, {"torsion", g.invariant_factors}};
}

inline json cohomology_json(int degree, CoeffKind kind, const AbelianGroup& g) {
  return json{{"degree", degree},
              {"coefficients", to_string(kind)},
              {"free_rank", g.free_rank},
              {"torsion", g.invariant_factors}};
}

inline json surface_json(const SurfaceDescriptor& s) {
  return json{{"surface", s.name()},
              {"orientable", s.orientable},
              {"genus", s.genus},
              {"euler_characteristic", s.euler_characteristic}};
}

inline json action_json(const Presentation& pres, const Action& a) {
  json values = json::object();
  for (auto& [label, v] : a.as_map(pres)) values[label] = v;
  return values;
}

inline json twist_json(const TwistRecord& t) {
  return json{{"geometric", t.geometric},
              {"wu_class", to_string(t.wu)},
              {"k_invariant", t.k_invariant}};
}

inline json report_json(const ClassificationReport& rep, const Presentation* pres) {
  json j;
  j["schema_version"] = 1;
  j["signature"] = print_signature(rep.signature);
  j["geometry"] = rep.geometry;
  j["homotopy_type_count"] = rep.homotopy_type_count;
  if (rep.action && pres) j["action"] = action_json(*pres, *rep.action);
  if (rep.catalog_entry) {
    j["catalog"] = json{{"base", rep.catalog_entry->base},
                        {"bundle_count", rep.catalog_entry->bundle_count},
                        {"descriptions", rep.catalog_entry->descriptions}};
  } else {
    j["twists_coincide"] = rep.twists_coincide;
    j["twists"] = json{{"standard", twist_json(rep.standard_twist)},
                       {"gluck", twist_json(rep.gluck_twist)}};
    j["wu_ambiguous"] = rep.wu_ambiguous;
    if (rep.kernel) j["kernel"] = surface_json(*rep.kernel);
    if (rep.h2_zu) j["h2_zu"] = abelian_json(*rep.h2_zu);
    if (rep.h3_zu) j["h3_zu"] = abelian_json(*rep.h3_zu);
    json tw = json::array();
    for (auto t : rep.reflector_twists) tw.push_back(to_string(t));
    j["reflector_curves"] = tw;
  }
  j["notes"] = rep.notes;
  j["citations"] = rep.citations;
  return j;
}

inline json census_json(const CensusReport& rep, const std::string& kind) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = kind;
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json je{{"label", e.label},
            {"table_row", e.table_row},
            {"homotopy_types", e.homotopy_types},
            {"geometric", e.geometric}};
    if (e.action_class) {
      je["action_class_size"] = e.action_class->members.size();
      je["kernel"] = surface_json(e.action_class->kernel);
      json tw = json::array();
      for (auto t : e.action_class->twists) tw.push_back(to_string(t));
      je["reflector_curves"] = tw;
    }
    if (!e.notes.empty()) je["notes"] = e.notes;
    entries.push_back(je);
  }
  j["entries"] = entries;
  j["totals"] = rep.totals;
  j["grand_total"] = rep.grand_total;
  j["citations"] = kind == "flat" ? json::array({"section 9", "Lemma 2"})
                                  : json::array({"section 3", "Lemma 2"});
  return j;
}

inline json validation_json(const OrbifoldSignature& sig, const ValidationResult& vr) {
  json v = json::array();
  for (const auto& viol : vr.violations)
    v.push_back(json{{"clause", viol.clause}, {"message", viol.message},
                     {"citation", viol.citation}});
  return json{{"schema_version", 1},
              {"signature", print_signature(sig)},
              {"valid", vr.valid},
              {"violations", v},
              {"notes", vr.notes}};
}

}  // namespace orb

#endif  // ORB_REPORT_JSON_HPP_
