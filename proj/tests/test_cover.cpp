#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "orb/cover.hpp"

using namespace orb;

TEST_CASE("kernel double covers of the pinned bases", "[cover]") {
  auto sig = parse_signature("S2(2,2,2,2)[]");
  auto pres = presentation(sig);
  auto actions = enumerate_actions(pres);
  REQUIRE(actions.size() == 1);
  REQUIRE(kernel_double_cover(sig, pres, actions[0]) == SurfaceDescriptor::orientable_genus(1));

  auto p22 = parse_signature("RP2(2,2)[]");
  auto ppres = presentation(p22);
  for (const auto& a : enumerate_actions(ppres))
    REQUIRE(kernel_double_cover(p22, ppres, a) == SurfaceDescriptor::non_orientable_genus(2));

  // The silvered Moebius band has one torus cover and one Klein bottle cover.
  auto mb = parse_signature("RP2()[*]");
  auto mpres = presentation(mb);
  std::vector<std::string> covers;
  for (const auto& a : enumerate_actions(mpres))
    covers.push_back(kernel_double_cover(mb, mpres, a).name());
  std::sort(covers.begin(), covers.end());
  REQUIRE(covers == std::vector<std::string>{"Klein bottle", "torus"});
}

TEST_CASE("chi doubles under the kernel cover on the corpus", "[cover]") {
  int signatures = 0;
  for (const auto& sig : orb::test::admissible_corpus(4, 6, 3)) {
    auto pres = presentation(sig);
    auto actions = enumerate_actions(pres);
    if (euler_characteristic(sig).sign() > 0) continue;
    ++signatures;
    for (const auto& a : actions) {
      SurfaceDescriptor cover = kernel_double_cover(sig, pres, a);
      REQUIRE(Rational(cover.euler_characteristic) ==
              euler_characteristic(sig) * Rational(2));
    }
  }
  REQUIRE(signatures >= 200);
}

TEST_CASE("rewriting lands in the kernel and respects free reduction", "[cover]") {
  auto sig = parse_signature("RP2(2,2)[]");
  auto pres = presentation(sig);
  auto action = enumerate_actions(pres)[0];
  DoubleCoverRewriter rw(pres, action);

  // A word with u = -1 cannot be rewritten.
  REQUIRE_THROWS_AS(rw.rewrite({pres.index_of("x1") + 1}, 0), std::invalid_argument);

  // Schreier generator words evaluate into the kernel and rewrite to a
  // single letter.
  const auto& kp = rw.kernel_presentation();
  for (int s = 0; s < kp.generator_count(); ++s) {
    Word w = rw.schreier_word(s);
    int sign = 1;
    for (int letter : w) sign *= action.value(std::abs(letter) - 1);
    REQUIRE(sign == 1);
    REQUIRE(rw.rewrite(w, 0) == Word{s + 1});
  }
}

TEST_CASE("the rewriter rejects trivial actions", "[cover]") {
  auto pres = presentation(parse_signature("T()[]"));
  Action trivial;
  trivial.values = {1, 1};
  REQUIRE_THROWS_AS(DoubleCoverRewriter(pres, trivial), std::invalid_argument);
}
