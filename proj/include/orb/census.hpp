#ifndef ORB_CENSUS_HPP_
#define ORB_CENSUS_HPP_

// Reproducing the counting results: the flat census of 23 homotopy types
// and bounded enumerations of hyperbolic bases for property testing.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "orb/classify.hpp"

namespace orb {

struct CensusEntry {
  std::string label;  // signature text or a table-row tag
  bool table_row = false;
  std::optional<OrbifoldSignature> signature;
  std::optional<ActionClass> action_class;
  int homotopy_types = 0;
  int geometric = 0;
  std::vector<std::string> notes;
};

struct CensusReport {
  std::vector<CensusEntry> entries;
  std::map<std::string, Int> totals;
  Int grand_total = 0;
};

// All admissible bundle bases of a geometry class with
// k + r + genus + (1 if non-orientable) <= max_complexity, canonical order.
inline std::vector<OrbifoldSignature> enumerate_bases(GeometryClass geometry,
                                                      Int max_complexity) {
  std::vector<OrbifoldSignature> out;
  for (Int orient = 1; orient >= 0; --orient)
    for (Int genus = orient ? 0 : 1; genus <= max_complexity; ++genus)
      for (Int k = 0; genus + k <= max_complexity; ++k)
        for (Int r = 0; genus + k + r + (orient ? 0 : 1) <= max_complexity; ++r) {
          OrbifoldSignature sig;
          sig.orientable = orient != 0;
          sig.genus = genus;
          sig.cone_orders.assign(static_cast<size_t>(k), 2);
          sig.reflector_circles.assign(static_cast<size_t>(r), {});
          if (geometry_class(sig) != geometry) continue;
          if (!validate_bundle_base(sig).valid) continue;
          out.push_back(sig);
        }
  std::sort(out.begin(), out.end(), [](const OrbifoldSignature& a, const OrbifoldSignature& b) {
    auto key = [](const OrbifoldSignature& s) {
      return std::make_tuple(complexity(s), s.orientable ? 0 : 1, s.genus, s.cone_count(),
                             s.circle_count());
    };
    return key(a) < key(b);
  });
  return out;
}

namespace census_detail {

inline CensusEntry computed_entry(const OrbifoldSignature& sig, const Presentation& pres,
                                  const ActionClass& cls) {
  CensusEntry e;
  e.label = print_signature(sig);
  e.signature = sig;
  e.action_class = cls;
  ClassificationReport rep = classify(sig, pres, cls.representative);
  e.homotopy_types = rep.homotopy_type_count;
  e.geometric = rep.homotopy_type_count == 1
                    ? 1
                    : 1 + (rep.gluck_twist.geometric ? 1 : 0);
  if (!cls.distinctness_certified)
    e.notes.push_back("distinct up to implemented symmetries");
  return e;
}

}  // namespace census_detail

// The 23 flat homotopy types: 10 S^2-bundle and 4 RP^2-bundle rows over T
// and Kb (table data), plus computed counts over the five singular flat
// bases. Any mismatch with the expected totals throws.
inline CensusReport flat_census() {
  CensusReport rep;

  CensusEntry s2row;
  s2row.label = "S2-bundles over T or Kb";
  s2row.table_row = true;
  s2row.homotopy_types = 10;
  s2row.geometric = 10;
  s2row.notes.push_back("table row (section 9); detected by fundamental group and "
                        "Stiefel-Whitney classes");
  rep.entries.push_back(s2row);

  CensusEntry rp2row;
  rp2row.label = "RP2-bundles over T or Kb";
  rp2row.table_row = true;
  rp2row.homotopy_types = 4;
  rp2row.geometric = 4;
  rp2row.notes.push_back("table row (section 9); groups are products with Z/2Z");
  rep.entries.push_back(rp2row);

  Int reflector_types = 0, finite_ab_types = 0, finite_ab_geometric = 0;
  for (const OrbifoldSignature& sig : enumerate_bases(GeometryClass::Euclidean, 6)) {
    if (sig.singular_locus_empty()) continue;  // T, Kb: covered by the table rows
    Presentation pres = presentation(sig);
    bool finite_ab = pres.abelianization().free_rank == 0;
    auto classes = dedup_actions(sig, pres, enumerate_actions(pres));
    for (const auto& cls : classes) {
      CensusEntry e = census_detail::computed_entry(sig, pres, cls);
      if (finite_ab) {
        finite_ab_types += e.homotopy_types;
        finite_ab_geometric += e.geometric;
      } else {
        // Infinite abelianization with singular locus: the mapping-torus
        // bases A and Mb.
        reflector_types += e.homotopy_types;
      }
      rep.entries.push_back(e);
    }
  }

  rep.totals["s2_bundles"] = 10;
  rep.totals["rp2_bundles"] = 4;
  rep.totals["reflector_bases"] = reflector_types;
  rep.totals["finite_abelianization"] = finite_ab_types;
  rep.grand_total = 10 + 4 + reflector_types + finite_ab_types;

  if (rep.grand_total != 23 || reflector_types != 4 || finite_ab_types != 5 ||
      finite_ab_geometric != 4)
    throw InternalError("flat census disagrees with the 23-type breakdown: got " +
                        std::to_string(rep.grand_total) + " total, " +
                        std::to_string(reflector_types) + " reflector, " +
                        std::to_string(finite_ab_types) + " finite-abelianization (" +
                        std::to_string(finite_ab_geometric) + " geometric)");
  return rep;
}

inline CensusReport hyperbolic_census(Int max_complexity) {
  if (max_complexity < 1)
    throw std::invalid_argument("hyperbolic_census: bound must be at least 1");
  CensusReport rep;
  Int types = 0, geometric = 0;
  for (const OrbifoldSignature& sig : enumerate_bases(GeometryClass::Hyperbolic, max_complexity)) {
    Presentation pres = presentation(sig);
    auto classes = dedup_actions(sig, pres, enumerate_actions(pres));
    for (const auto& cls : classes) {
      CensusEntry e = census_detail::computed_entry(sig, pres, cls);
      // T(2,2)- and Kb(2,2)-like bases sit outside the proper-geometric-
      // decomposition statement of section 3.
      bool t22 = sig.orientable && sig.genus == 1 && sig.cone_count() == 2 &&
                 sig.circle_count() == 0;
      bool kb22 = !sig.orientable && sig.genus == 2 && sig.cone_count() == 2 &&
                  sig.circle_count() == 0;
      if (t22 || kb22)
        e.notes.push_back("excluded from the geometric-decomposition statement (section 3)");
      types += e.homotopy_types;
      geometric += e.geometric;
      rep.entries.push_back(e);
    }
  }
  rep.totals["homotopy_types"] = types;
  rep.totals["geometric"] = geometric;
  rep.grand_total = types;
  return rep;
}

}  // namespace orb

#endif  // ORB_CENSUS_HPP_
