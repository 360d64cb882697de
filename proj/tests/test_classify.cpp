#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "orb/classify.hpp"

using namespace orb;

namespace {

ClassificationReport classify_first(const std::string& text) {
  auto sig = parse_signature(text);
  auto pres = presentation(sig);
  auto actions = enumerate_actions(pres);
  REQUIRE_FALSE(actions.empty());
  return classify(sig, pres, actions.front());
}

}  // namespace

TEST_CASE("homotopy type counts", "[classify]") {
  REQUIRE(homotopy_type_count(parse_signature("S2(2,2)[*]")) == 1);
  REQUIRE(homotopy_type_count(parse_signature("S2(2,2,2,2)[]")) == 2);
  REQUIRE(homotopy_type_count(parse_signature("RP2(2,2)[]")) == 2);
}

TEST_CASE("generated by involutions and the Gluck criterion", "[classify]") {
  REQUIRE(generated_by_involutions(parse_signature("S2(2,2,2,2)[]")));
  REQUIRE_FALSE(generated_by_involutions(parse_signature("RP2(2,2)[]")));
  REQUIRE_FALSE(generated_by_involutions(parse_signature("S2()[*,*]")));

  REQUIRE_FALSE(gluck_twist_geometric(parse_signature("S2(2,2,2,2)[]")));
  REQUIRE(gluck_twist_geometric(parse_signature("RP2(2,2)[]")));
  REQUIRE_FALSE(gluck_twist_geometric(parse_signature("S2(2,2,2,2,2,2)[]")));
  REQUIRE(gluck_twist_geometric(parse_signature("T(2,2)[]")));
}

TEST_CASE("wu classes of the pinned bases", "[classify][wu]") {
  auto p22 = parse_signature("RP2(2,2)[]");
  auto pres = presentation(p22);
  for (const auto& a : enumerate_actions(pres)) {
    auto wu = wu_class(p22, pres, a);
    REQUIRE(wu.symbol == WuClassSymbol::Usquared);
    REQUIRE_FALSE(wu.ambiguous);
    REQUIRE_FALSE(wu.any_restricted_square_nonzero);
  }

  // D(2,2): the restricted square is nonzero (the published erratum), so UW
  // and no case-(1)/(2) ambiguity.
  auto d22 = parse_signature("S2(2,2)[*]");
  auto dpres = presentation(d22);
  auto dwu = wu_class(d22, dpres, enumerate_actions(dpres).at(0));
  REQUIRE(dwu.symbol == WuClassSymbol::UW);
  REQUIRE(dwu.any_restricted_square_nonzero);

  // Bundle case: not determined by the group.
  auto torus = parse_signature("T()[]");
  auto tpres = presentation(torus);
  REQUIRE_THROWS_AS(wu_class(torus, tpres, enumerate_actions(tpres).at(0)),
                    std::invalid_argument);
}

TEST_CASE("wu never returns Zero without a reflector curve", "[classify][wu]") {
  for (const auto& sig : orb::test::aspherical_singular_corpus(2, 4, 2)) {
    auto pres = presentation(sig);
    for (const auto& a : enumerate_actions(pres)) {
      auto wu = wu_class(sig, pres, a);
      if (sig.circle_count() == 0) {
        REQUIRE(wu.symbol != WuClassSymbol::Zero);
        REQUIRE_FALSE(wu.ambiguous);
      }
      if (wu.ambiguous) {
        REQUIRE(sig.circle_count() > 0);
        REQUIRE(sig.cone_count() > 0);
        REQUIRE(wu.symbol == WuClassSymbol::Zero);
      }
    }
  }
}

TEST_CASE("spherical catalog counts", "[classify][catalog]") {
  auto catalog = spherical_catalog();
  std::map<std::string, int> counts;
  for (const auto& e : catalog) counts[e.base] = e.bundle_count;
  REQUIRE(counts["S2()[]"] == 2);
  REQUIRE(counts["RP2()[]"] == 4);
  REQUIRE(counts["S2(2,2)[]"] == 2);
  REQUIRE(counts["S2()[*]"] == 1);
  REQUIRE(counts["S2(2)[*]"] == 1);
  REQUIRE(catalog.size() == 5);
}

TEST_CASE("full reports on the flat singular bases", "[classify]") {
  auto rep = classify_first("S2(2,2,2,2)[]");
  REQUIRE(rep.geometry == "S2xE2");
  REQUIRE(rep.homotopy_type_count == 2);
  REQUIRE(rep.standard_twist.geometric);
  REQUIRE_FALSE(rep.gluck_twist.geometric);
  REQUIRE(rep.h2_zu == AbelianGroup());
  REQUIRE(rep.standard_twist.k_invariant == "beta_u(U^2)");
  REQUIRE(rep.kernel == SurfaceDescriptor::orientable_genus(1));

  auto annulus = parse_signature("S2()[*,*]");
  auto apres = presentation(annulus);
  auto a = parse_action_literal(apres, "z=+1");
  auto arep = classify(annulus, apres, a);
  REQUIRE(arep.homotopy_type_count == 1);
  REQUIRE(arep.twists_coincide);
  REQUIRE(arep.gluck_twist.geometric);
  REQUIRE(arep.h2_zu == AbelianGroup(1, {2}));
  REQUIRE(arep.kernel == SurfaceDescriptor::orientable_genus(1));

  // Bundle case note for a torsion-free base.
  auto trep = classify_first("T()[]");
  REQUIRE(trep.homotopy_type_count == 2);
  REQUIRE(trep.gluck_twist.geometric);
  REQUIRE(trep.standard_twist.wu == WuClassSymbol::NotApplicable);
  bool has_bundle_note = false;
  for (const auto& n : trep.notes) has_bundle_note |= n.find("bundle case") != std::string::npos;
  REQUIRE(has_bundle_note);

  // Spherical bases route to the catalog.
  auto srep = classify_first("S2(2,2)[]");
  REQUIRE(srep.geometry == "spherical catalog");
  REQUIRE(srep.homotopy_type_count == 2);
}

TEST_CASE("erratum note appears exactly for the D(2,2) group", "[classify]") {
  auto rep = classify_first("S2(2,2)[*]");
  bool found = false;
  for (const auto& n : rep.notes) found |= n.find("erratum") != std::string::npos;
  REQUIRE(found);
  REQUIRE(rep.homotopy_type_count == 1);
  REQUIRE(rep.standard_twist.wu == WuClassSymbol::UW);
}

TEST_CASE("count-one bases coincide with geometric Gluck twists", "[classify]") {
  for (const auto& sig : orb::test::aspherical_singular_corpus(2, 4, 2)) {
    auto pres = presentation(sig);
    for (const auto& a : enumerate_actions(pres)) {
      auto rep = classify(sig, pres, a);
      REQUIRE((rep.homotopy_type_count == 1) ==
              (rep.twists_coincide && rep.gluck_twist.geometric));
      // Kernel chi doubling, independent of the twist flag.
      REQUIRE(Rational(rep.kernel->euler_characteristic) ==
              euler_characteristic(sig) * Rational(2));
      // Wu symbol is shared by both twists when the locus is nonempty.
      REQUIRE(rep.standard_twist.wu == rep.gluck_twist.wu);
    }
  }
}

TEST_CASE("surface-bundle-over-RP2 predicates", "[classify][rp2]") {
  REQUIRE(rp2_product_test(true, true, true));
  REQUIRE_FALSE(rp2_product_test(true, true, false));
  REQUIRE_FALSE(rp2_product_test(false, true, true));

  auto d22 = rp2_section_bundle_test(parse_signature("S2(2,2)[*]"), true);
  REQUIRE(d22.satisfied);
  REQUIRE(d22.consistent);

  auto s2222 = rp2_section_bundle_test(parse_signature("S2(2,2,2,2)[]"), true);
  REQUIRE(s2222.satisfied);
  REQUIRE_FALSE(s2222.consistent);  // orientable + torsion forces a reflector curve

  auto torsion_free = rp2_section_bundle_test(parse_signature("T()[]"), true);
  REQUIRE_FALSE(torsion_free.satisfied);
}

TEST_CASE("classify rejects invalid bases", "[classify]") {
  auto bad = parse_signature("S2(2)[]");
  auto pres_ok = presentation(bad);
  Action fake;
  fake.values = {-1};
  REQUIRE_THROWS_AS(classify(bad, pres_ok, fake), std::invalid_argument);
}

TEST_CASE("orientable kernels force vanishing restricted squares", "[classify][wu]") {
  for (const auto& sig : orb::test::aspherical_singular_corpus(2, 4, 2)) {
    auto pres = presentation(sig);
    for (const auto& a : enumerate_actions(pres)) {
      if (!kernel_double_cover(sig, pres, a).orientable) continue;
      REQUIRE_FALSE(wu_class(sig, pres, a).any_restricted_square_nonzero);
    }
  }
}
