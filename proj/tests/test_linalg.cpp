#include <catch_amalgamated.hpp>
#include <random>

#include "orb/abelian.hpp"
#include "orb/int_linalg.hpp"
#include "orb/rational.hpp"

using namespace orb;

namespace {

IntMatrix make(int rows, int cols, std::initializer_list<Int> vals) {
  IntMatrix m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = *it++;
  return m;
}

}  // namespace

TEST_CASE("smith normal form on the pinned examples", "[linalg]") {
  auto s = smith_normal_form(make(2, 2, {2, 0, 0, 2}));
  REQUIRE(s.invariant_factors() == std::vector<Int>{2, 2});

  s = smith_normal_form(make(2, 2, {1, 2, 3, 4}));
  REQUIRE(s.invariant_factors() == std::vector<Int>{1, 2});

  s = smith_normal_form(IntMatrix(2, 3));
  REQUIRE(s.invariant_factors().empty());
  REQUIRE(s.rank() == 0);
}

TEST_CASE("smith transforms are unimodular and reproduce the input", "[linalg]") {
  std::mt19937 rng(20240511);
  std::uniform_int_distribution<int> dim(1, 6), entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    IntMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = entry(rng);
    SmithForm s = smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    REQUIRE(s.u * s.u_inv == IntMatrix::identity(rows));
    REQUIRE(s.v * s.v_inv == IntMatrix::identity(cols));
    REQUIRE(s.u_inv * s.d * s.v_inv == a);
    // Divisibility chain.
    auto f = s.invariant_factors();
    for (size_t i = 0; i + 1 < f.size(); ++i) REQUIRE(f[i + 1] % f[i] == 0);
  }
}

TEST_CASE("kernel and lattice bases", "[linalg]") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dim(1, 5), entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    IntMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = entry(rng);
    IntMatrix k = kernel_basis(a);
    REQUIRE((a * k).is_zero());
    REQUIRE(k.cols() == cols - smith_normal_form(a).rank());
    // Every column of a solves inside its own lattice basis.
    IntMatrix basis = lattice_basis(a);
    if (basis.cols() > 0) REQUIRE(solve_columns(basis, a).has_value());
  }
}

TEST_CASE("abelian group canonical form", "[linalg]") {
  REQUIRE(AbelianGroup::from_quotient(2, make(2, 1, {2, 2})) == AbelianGroup(1, {2}));
  REQUIRE(AbelianGroup::from_quotient(1, make(1, 1, {4})) == AbelianGroup(0, {4}));
  REQUIRE(AbelianGroup::from_quotient(3, IntMatrix(3, 0)) == AbelianGroup::free(3));
  REQUIRE(AbelianGroup(0, {2, 2}).to_string() == "(Z/2)^2");
  REQUIRE(AbelianGroup(1, {2}).to_string() == "Z + Z/2");
  REQUIRE(AbelianGroup().to_string() == "0");
  REQUIRE(AbelianGroup::from_quotient(2, make(2, 2, {2, 0, 0, 3})) == AbelianGroup(0, {6}));
}

TEST_CASE("rational arithmetic is exact", "[linalg]") {
  REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(-1, 2) < Rational(0));
  REQUIRE((Rational(1) - Rational(1, 2)).to_string() == "1/2");
  REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
