#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "orb/cover.hpp"

using namespace orb;

namespace {

std::vector<Action> actions_of(const std::string& text) {
  return enumerate_actions(presentation(parse_signature(text)));
}

}  // namespace

TEST_CASE("action counts on the pinned bases", "[actions]") {
  REQUIRE(actions_of("S2(2,2,2,2)[]").size() == 1);
  REQUIRE(actions_of("S2()[*,*]").size() == 2);
  REQUIRE(actions_of("S2(2,2,2)[]").empty());
  REQUIRE(actions_of("RP2()[*]").size() == 2);
  REQUIRE(actions_of("RP2(2,2)[]").size() == 2);
  REQUIRE(actions_of("S2(2,2)[*]").size() == 1);
  REQUIRE(actions_of("T()[]").size() == 3);  // nonzero classes of Hom(Z^2, Z/2)
}

TEST_CASE("torsion generators are forced to -1", "[actions]") {
  auto sig = parse_signature("S2(2,2)[*]");
  auto pres = presentation(sig);
  for (const auto& a : enumerate_actions(pres))
    for (int i = 0; i < pres.generator_count(); ++i)
      if (pres.is_torsion_generator(i)) REQUIRE(a.value(i) == -1);
}

TEST_CASE("reflector curve twisting", "[actions]") {
  auto annulus = parse_signature("S2()[*,*]");
  auto pres = presentation(annulus);
  auto actions = enumerate_actions(pres);
  REQUIRE(actions.size() == 2);
  for (const auto& a : actions) {
    auto twists = classify_reflector_curves(pres, a);
    REQUIRE(twists.size() == 2);
    REQUIRE(twists[0] == twists[1]);  // z2 = z1^{-1} ties the two curves
    if (a.value(pres.index_of("z1")) < 0) {
      REQUIRE(twists[0] == CurveTwist::Twisted);
      REQUIRE(kernel_double_cover(annulus, pres, a) ==
              SurfaceDescriptor::non_orientable_genus(2));
    } else {
      REQUIRE(twists[0] == CurveTwist::Untwisted);
      REQUIRE(kernel_double_cover(annulus, pres, a) == SurfaceDescriptor::orientable_genus(1));
    }
  }

  // The silvered Moebius band's curve is untwisted for both actions.
  auto mb = parse_signature("RP2()[*]");
  auto mpres = presentation(mb);
  for (const auto& a : enumerate_actions(mpres)) {
    auto twists = classify_reflector_curves(mpres, a);
    REQUIRE(twists == std::vector<CurveTwist>{CurveTwist::Untwisted});
  }

  // D(2): the relator x z forces the curve to be twisted.
  auto d2 = parse_signature("S2(2)[*]");
  auto dpres = presentation(d2);
  auto dacts = enumerate_actions(dpres);
  REQUIRE(dacts.size() == 1);
  REQUIRE(classify_reflector_curves(dpres, dacts[0]) ==
          std::vector<CurveTwist>{CurveTwist::Twisted});

  // D(2,2): untwisted is forced instead (even cone count).
  auto d22 = parse_signature("S2(2,2)[*]");
  auto d22pres = presentation(d22);
  REQUIRE(classify_reflector_curves(d22pres, enumerate_actions(d22pres).at(0)) ==
          std::vector<CurveTwist>{CurveTwist::Untwisted});
}

TEST_CASE("parity of cones plus twisted curves over the corpus", "[actions]") {
  int checked = 0, signatures = 0;
  for (const auto& sig : orb::test::admissible_corpus(4, 6, 3)) {
    ++signatures;
    auto pres = presentation(sig);
    for (const auto& a : enumerate_actions(pres)) {
      REQUIRE(parity_check(sig, pres, a));
      ++checked;
    }
  }
  REQUIRE(signatures >= 200);
  REQUIRE(checked >= 200);
}

TEST_CASE("actions exist exactly when validation accepts", "[actions]") {
  // The one exception is the plain sphere: trivial group, no epimorphism,
  // but still a bundle base.
  for (int orient = 0; orient <= 1; ++orient)
    for (Int genus = orient ? 0 : 1; genus <= 3; ++genus)
      for (Int k = 0; k <= 5; ++k)
        for (Int r = 0; r <= 2; ++r) {
          OrbifoldSignature sig;
          sig.orientable = orient != 0;
          sig.genus = genus;
          sig.cone_orders.assign(static_cast<size_t>(k), 2);
          sig.reflector_circles.assign(static_cast<size_t>(r), {});
          bool valid = validate_bundle_base(sig).valid;
          bool has_action = !enumerate_actions(presentation(sig)).empty();
          if (has_trivial_group(sig) && !sig.is_s2_one_cone()) {
            REQUIRE(valid);
            REQUIRE_FALSE(has_action);
          } else {
            REQUIRE(valid == has_action);
          }
        }
}

TEST_CASE("dedup on the flat bases", "[actions]") {
  auto classes_of = [](const std::string& text) {
    auto sig = parse_signature(text);
    auto pres = presentation(sig);
    return dedup_actions(sig, pres, enumerate_actions(pres));
  };
  REQUIRE(classes_of("RP2(2,2)[]").size() == 1);   // unique up to Aut(pi)
  REQUIRE(classes_of("S2()[*,*]").size() == 2);    // kernels T vs Kb
  REQUIRE(classes_of("S2(2,2,2,2)[]").size() == 1);
  REQUIRE(classes_of("RP2()[*]").size() == 2);
  REQUIRE(classes_of("T()[]").size() == 1);        // GL(2,F2) is transitive

  auto p22 = classes_of("RP2(2,2)[]");
  REQUIRE(p22[0].members.size() == 2);
  REQUIRE(p22[0].kernel == SurfaceDescriptor::non_orientable_genus(2));
}

TEST_CASE("dedup never merges distinct fingerprints", "[actions]") {
  for (const auto& sig : orb::test::aspherical_singular_corpus(2, 4, 2)) {
    auto pres = presentation(sig);
    auto classes = dedup_actions(sig, pres, enumerate_actions(pres));
    for (const auto& cls : classes)
      for (const auto& a : cls.members) {
        REQUIRE(kernel_double_cover(sig, pres, a) == cls.kernel);
        auto tw = classify_reflector_curves(pres, a);
        std::sort(tw.begin(), tw.end());
        REQUIRE(tw == cls.twists);
      }
  }
}

TEST_CASE("action literals", "[actions]") {
  auto sig = parse_signature("S2()[*,*]");
  auto pres = presentation(sig);
  auto a = parse_action_literal(pres, "c1=-1,c2=-1,z=+1");
  REQUIRE(a.value(pres.index_of("z1")) == 1);
  REQUIRE(a.value(pres.index_of("z2")) == 1);
  REQUIRE(a.value(pres.index_of("c1")) == -1);

  // Omitted torsion generators default to -1.
  auto b = parse_action_literal(pres, "z=-1");
  REQUIRE(b.value(pres.index_of("c2")) == -1);
  REQUIRE(b.value(pres.index_of("z2")) == -1);

  REQUIRE_THROWS_AS(parse_action_literal(pres, "q=+1"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_action_literal(pres, "z1=0"), std::invalid_argument);
  // Non-torsion generators may not be left unassigned.
  auto tor = presentation(parse_signature("T()[]"));
  REQUIRE_THROWS_AS(parse_action_literal(tor, "a1=-1"), std::invalid_argument);
}
