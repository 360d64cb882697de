#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "orb/presentation.hpp"

using namespace orb;

TEST_CASE("standard presentation of S(2,2,2,2)", "[presentation]") {
  auto p = presentation(parse_signature("S2(2,2,2,2)[]"));
  REQUIRE(p.generator_count() == 4);
  for (int i = 0; i < 4; ++i) REQUIRE(p.generators[i].role == GeneratorRole::Cone);
  REQUIRE(p.relators.size() == 5);
  // Four torsion relators and the global product.
  for (int i = 0; i < 4; ++i) REQUIRE(p.relators[i] == Word{i + 1, i + 1});
  REQUIRE(p.relators[4] == Word{1, 2, 3, 4});
}

TEST_CASE("reflector circles get a loop, a reflection and two relators", "[presentation]") {
  auto p = presentation(parse_signature("S2()[*,*]"));
  REQUIRE(p.generator_count() == 4);  // z1 c1 z2 c2
  REQUIRE(p.index_of("z1") == 0);
  REQUIRE(p.index_of("c1") == 1);
  REQUIRE(p.generators[1].role == GeneratorRole::Reflection);
  // c1^2, [c1,z1], c2^2, [c2,z2], global z1 z2.
  REQUIRE(p.relators.size() == 5);
  REQUIRE(p.relators.back() == Word{1, 3});
  // D x Z: abelianization Z + (Z/2)^2.
  REQUIRE(p.abelianization() == AbelianGroup(1, {2, 2}));
}

TEST_CASE("P(2,2) presentation and its group", "[presentation]") {
  auto p = presentation(parse_signature("RP2(2,2)[]"));
  REQUIRE(p.generator_count() == 3);  // v1, x1, x2
  REQUIRE(p.generators[0].role == GeneratorRole::Crosscap);
  REQUIRE(p.relators.back() == Word{2, 3, 1, 1});
  // Z *_Z D abelianized: relations 2 x1, 2 x2, x1 + x2 + 2v give Z/2 + Z/4.
  REQUIRE(p.abelianization() == AbelianGroup(0, {2, 4}));
}

TEST_CASE("out-of-scope signatures are rejected by presentation", "[presentation]") {
  REQUIRE_THROWS_AS(presentation(parse_signature("S2(3,3,3)[]")), OutOfScopeError);
  REQUIRE_THROWS_AS(presentation(parse_signature("S2()[*(2,2)]")), OutOfScopeError);
}

TEST_CASE("abelianization matches the classical surface values", "[presentation]") {
  for (Int g = 0; g <= 4; ++g) {
    OrbifoldSignature sig;
    sig.orientable = true;
    sig.genus = g;
    REQUIRE(presentation(sig).abelianization() == AbelianGroup::free(2 * g));
  }
  for (Int g = 1; g <= 4; ++g) {
    OrbifoldSignature sig;
    sig.orientable = false;
    sig.genus = g;
    REQUIRE(presentation(sig).abelianization() == AbelianGroup(g - 1, {2}));
  }
}

TEST_CASE("free reduction and word helpers", "[presentation]") {
  REQUIRE(free_reduce({1, 2, -2, -1}) == Word{});
  REQUIRE(free_reduce({1, -2, 2, 3}) == Word{1, 3});
  REQUIRE(word_inverse({1, -2}) == Word{2, -1});
}
