#ifndef ORB_CLASSIFY_HPP_
#define ORB_CLASSIFY_HPP_

// Decision procedures for S^2-orbifold bundles over a validated base:
// homotopy-type counts, geometricity of the Gluck twist, second Wu classes,
// the spherical catalog, and the surface-bundle-over-RP2 predicates.

#include <optional>
#include <string>
#include <vector>

#include "orb/cup.hpp"
#include "orb/graph_of_groups.hpp"
#include "orb/restriction.hpp"
#include "orb/validate.hpp"

namespace orb {

// With a reflector curve every bundle over B is standard (one homotopy
// type); with cone points only, the Gluck twist gives a second one.
inline int homotopy_type_count(const OrbifoldSignature& sig) {
  return sig.circle_count() > 0 ? 1 : 2;
}

// True exactly for the quotients of orientable surfaces by the
// hyperelliptic involution: underlying sphere, cones only.
inline bool generated_by_involutions(const OrbifoldSignature& sig) {
  return sig.orientable && sig.genus == 0 && sig.circle_count() == 0 && sig.cone_count() > 0;
}

inline bool gluck_twist_geometric(const OrbifoldSignature& sig) {
  return sig.circle_count() > 0 || !generated_by_involutions(sig);
}

enum class WuClassSymbol { Zero, Usquared, UW, NotApplicable };

inline std::string to_string(WuClassSymbol w) {
  switch (w) {
    case WuClassSymbol::Zero: return "0";
    case WuClassSymbol::Usquared: return "U^2";
    case WuClassSymbol::UW: return "UW";
    case WuClassSymbol::NotApplicable: return "not determined by pi (bundle case)";
  }
  return "?";
}

struct WuResult {
  WuClassSymbol symbol = WuClassSymbol::NotApplicable;
  // Both Theorem 14 cases (1) and (2) apply; the symbol then reports case
  // (1) and this flag is set.
  bool ambiguous = false;
  std::vector<std::string> citations;
  bool any_restricted_square_nonzero = false;
};

// v2 from the restricted cup squares: UW when some Res(A) has nonzero
// square; otherwise 0 with a reflector curve, U^2 with cone points.
inline WuResult wu_class(const OrbifoldSignature& sig, const Presentation& pres,
                         const Action& action) {
  if (sig.singular_locus_empty())
    throw std::invalid_argument(
        "wu_class: base has no singular locus; Gluck reconstruction changes v2 and the "
        "class is not determined by pi");

  WuResult out;
  RestrictionData rest = restriction_h1(pres, action);
  DoubleCoverRewriter rw(pres, action);
  SurfaceCupForm form = surface_cup_form(rw.kernel_presentation());

  for (size_t b = 0; b < rest.pi_basis.size(); ++b) {
    F2Vec coords(rest.kappa_basis.size(), 0);
    for (size_t i = 0; i < rest.kappa_basis.size(); ++i)
      coords[i] = rest.matrix.at(static_cast<int>(i), static_cast<int>(b));
    if (form.pair_coords(coords, coords)) {
      out.any_restricted_square_nonzero = true;
      break;
    }
  }

  if (out.any_restricted_square_nonzero) {
    out.symbol = WuClassSymbol::UW;
    out.citations = {"Theorem 14(3)"};
  } else if (sig.circle_count() > 0 && sig.cone_count() == 0) {
    out.symbol = WuClassSymbol::Zero;
    out.citations = {"Theorem 14(1)"};
  } else if (sig.circle_count() == 0) {
    out.symbol = WuClassSymbol::Usquared;
    out.citations = {"Theorem 14(2)"};
  } else {
    // Reflector curves and cone points with every restricted square zero:
    // cases (1) and (2) both apply verbatim; report (1) and flag it.
    out.symbol = WuClassSymbol::Zero;
    out.ambiguous = true;
    out.citations = {"Theorem 14(1)", "Theorem 14(2)"};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spherical catalog: table data, not computed.

struct SphericalCatalogEntry {
  std::string base;
  int bundle_count;
  std::vector<std::string> descriptions;
  std::vector<std::string> citations;
};

inline std::vector<SphericalCatalogEntry> spherical_catalog() {
  return {
      {"S2()[]",
       2,
       {"S2 x S2", "twisted S2-bundle over S2"},
       {"section 4"}},
      {"RP2()[]",
       4,
       {"quotients of S2 x S2 by involutions (A,-I), A diagonal"},
       {"section 4"}},
      {"S2(2,2)[]",
       2,
       {"E(2,2) u S2xD2 (geometric; also an S2-bundle over RP2)",
        "RP4 #_{S1} RP4 = E(2,2) u_tau S2xD2 (distinguished by the q-invariant)"},
       {"section 4"}},
      {"S2()[*]",
       1,
       {"unique bundle; orientable total space, v2 = 0, untwisted reflector curve"},
       {"section 4", "Theorem 7 Corollary B"}},
      {"S2(2)[*]",
       1,
       {"unique bundle; the nontrivial RP2-bundle over RP2, u-twisted reflector curve"},
       {"section 4", "Theorem 7 Corollary B"}},
  };
}

// ---------------------------------------------------------------------------
// Full per-(base, action) report.

struct TwistRecord {
  bool geometric = true;
  WuClassSymbol wu = WuClassSymbol::NotApplicable;
  std::string k_invariant;
};

struct ClassificationReport {
  OrbifoldSignature signature;
  std::optional<Action> action;
  std::string geometry;  // "S2xE2", "S2xH2" or "spherical catalog"
  int homotopy_type_count = 0;
  bool twists_coincide = false;
  TwistRecord standard_twist, gluck_twist;
  bool wu_ambiguous = false;
  std::optional<SurfaceDescriptor> kernel;
  std::optional<AbelianGroup> h2_zu;
  std::optional<AbelianGroup> h3_zu;
  std::vector<CurveTwist> reflector_twists;
  std::vector<std::string> notes;
  std::vector<std::string> citations;
  std::optional<SphericalCatalogEntry> catalog_entry;

  void cite(const std::string& c) {
    for (const auto& e : citations)
      if (e == c) return;
    citations.push_back(c);
  }
};

inline ClassificationReport classify(const OrbifoldSignature& sig, const Presentation& pres,
                                     const Action& action) {
  ValidationResult vr = validate_bundle_base(sig);
  if (!vr.valid)
    throw std::invalid_argument("classify: signature is not a valid bundle base: " +
                                vr.violations.front().message);

  ClassificationReport rep;
  rep.signature = sig;
  rep.action = action;

  Rational chi = euler_characteristic(sig);
  if (chi.sign() > 0) {
    rep.geometry = "spherical catalog";
    for (const auto& entry : spherical_catalog())
      if (parse_signature(entry.base) == sig) rep.catalog_entry = entry;
    if (!rep.catalog_entry)
      throw InternalError("spherical base missing from the catalog: " + print_signature(sig));
    rep.homotopy_type_count = rep.catalog_entry->bundle_count;
    for (const auto& c : rep.catalog_entry->citations) rep.cite(c);
    rep.notes.push_back("spherical base: catalog data, generic machinery bypassed");
    return rep;
  }

  rep.geometry = chi.sign() == 0 ? "S2xE2" : "S2xH2";
  rep.cite(chi.sign() == 0 ? "section 1 (chi = 0)" : "section 1 (chi < 0)");
  rep.reflector_twists = classify_reflector_curves(pres, action);
  rep.kernel = kernel_double_cover(sig, pres, action);

  if (sig.singular_locus_empty()) {
    // Torsion-free: both S^2-bundles over the surface are geometric and the
    // Wu class distinguishes them (not determined by pi alone).
    rep.homotopy_type_count = 2;
    rep.twists_coincide = false;
    rep.standard_twist = {true, WuClassSymbol::NotApplicable, "0"};
    rep.gluck_twist = {true, WuClassSymbol::NotApplicable, "0"};
    rep.h3_zu = AbelianGroup();  // cd 2
    rep.notes.push_back("bundle case: torsion-free group, k1 = 0; Gluck reconstruction "
                        "changes v2");
    rep.cite("section 5 (torsion-free)");
    rep.cite("Theorem 13");
    return rep;
  }

  rep.homotopy_type_count = homotopy_type_count(sig);
  rep.twists_coincide = rep.homotopy_type_count == 1;
  rep.cite(rep.homotopy_type_count == 1 ? "Theorem 12(3) (reflector curve)"
                                        : "Theorem 12(3) + Theorem 11");

  Theorem10Result t10 = theorem10_closed_form(sig, pres, action);
  rep.h2_zu = t10.h2_zu;
  rep.h3_zu = t10.h3_zu;
  rep.cite("Theorem 10");
  if (t10.published_form_deviation)
    rep.notes.push_back("H^2(pi;Z^u) computed as Z^r/2M; the published closed form "
                        "Z + (Z/2)^{r-1} does not cover this action");

  WuResult wu = wu_class(sig, pres, action);
  rep.wu_ambiguous = wu.ambiguous;
  for (const auto& c : wu.citations) rep.cite(c);

  rep.standard_twist = {true, wu.symbol, t10.k_invariant};
  rep.gluck_twist = {gluck_twist_geometric(sig), wu.symbol, t10.k_invariant};
  if (!rep.gluck_twist.geometric) rep.cite("Theorem 13");

  // Report-only surgery notes; nothing is computed from them.
  rep.notes.push_back("TOP structure set is infinite: the group has torsion and is not a "
                      "product with Z/2Z (section 10)");
  if (pres.abelianization().free_rank == 0)
    rep.notes.push_back("finite abelianization: infinitely many homeomorphism types within "
                        "each homotopy type (section 10)");

  if (!sig.orientable && sig.genus == 1 && sig.cone_count() == 2 && sig.circle_count() == 0) {
    rep.notes.push_back("whether the non-standard flat manifold with this group also "
                        "fibres over RP2 is open (section 11)");
  }
  if (sig.orientable && sig.genus == 0 && sig.cone_count() == 2 && sig.circle_count() == 1) {
    rep.notes.push_back("erratum note: an earlier published v2 value for this group is "
                        "wrong; here the restricted square is nonzero (section 8)");
  }
  if (wu.ambiguous)
    rep.notes.push_back("Theorem 14 cases (1) and (2) both apply (reflector curves and "
                        "cone points, all restricted squares zero); reporting case (1)");
  return rep;
}

// ---------------------------------------------------------------------------
// Surface bundles over RP2 (section 11 predicates).

// M ~ RP2 x F iff pi splits as claimed, chi matches and v2 vanishes; the
// manifold-level hypotheses arrive as booleans.
inline bool rp2_product_test(bool pi_is_product, bool chi_matches, bool v2_zero) {
  return pi_is_product && chi_matches && v2_zero;
}

struct Rp2SectionBundleResult {
  bool satisfied = false;
  bool consistent = true;  // false: hypotheses contradict Corollary B
  std::vector<std::string> citations;
};

// Orientable total spaces fibering over RP2 with a section: needs an
// order-2 element and a surface-group kernel; orientability then forces a
// reflector curve on the base.
inline Rp2SectionBundleResult rp2_section_bundle_test(const OrbifoldSignature& sig,
                                                      bool orientable_total_space) {
  Rp2SectionBundleResult out;
  bool has_torsion = sig.cone_count() + sig.circle_count() > 0;
  out.satisfied = orientable_total_space && has_torsion;
  if (out.satisfied) {
    out.citations = {"Theorem 16"};
    if (sig.circle_count() == 0) {
      out.consistent = false;
      out.citations.push_back("Theorem 12 Corollary B");
    } else {
      out.citations.push_back("Theorem 16 proof (base has a reflector curve)");
    }
  }
  return out;
}

}  // namespace orb

#endif  // ORB_CLASSIFY_HPP_
