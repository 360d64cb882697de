#ifndef ORB_ABELIAN_HPP_
#define ORB_ABELIAN_HPP_

// Finitely generated abelian groups in invariant-factor form.

#include <sstream>
#include <string>
#include <vector>

#include "orb/int_linalg.hpp"

namespace orb {

struct AbelianGroup {
  Int free_rank = 0;
  std::vector<Int> invariant_factors;  // each >= 2, d_i | d_{i+1}

  AbelianGroup() = default;
  AbelianGroup(Int rank, std::vector<Int> factors)
      : free_rank(rank), invariant_factors(std::move(factors)) {}

  static AbelianGroup free(Int rank) { return AbelianGroup(rank, {}); }

  static AbelianGroup elementary_two(Int n) {
    return AbelianGroup(0, std::vector<Int>(static_cast<size_t>(n), 2));
  }

  // Z^ambient / (column span of relations).
  static AbelianGroup from_quotient(int ambient, const IntMatrix& relations) {
    SmithForm s = smith_normal_form(relations);
    AbelianGroup g;
    int r = s.rank();
    g.free_rank = ambient - r;
    for (Int d : s.invariant_factors())
      if (d > 1) g.invariant_factors.push_back(d);
    return g;
  }

  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }

  // Dimension as an F2 vector space when every factor is 2 and free_rank = 0.
  bool is_elementary_two() const {
    if (free_rank != 0) return false;
    for (Int d : invariant_factors)
      if (d != 2) return false;
    return true;
  }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
      os << "Z";
      if (free_rank > 1) os << "^" << free_rank;
      first = false;
    }
    // Run-length collapse equal factors: Z/2 + (Z/2)^2 style.
    size_t i = 0;
    while (i < invariant_factors.size()) {
      size_t j = i;
      while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
      if (!first) os << " + ";
      if (j - i > 1) os << "(Z/" << invariant_factors[i] << ")^" << (j - i);
      else os << "Z/" << invariant_factors[i];
      first = false;
      i = j;
    }
    return os.str();
  }
};

// Quotient K/D of lattices, K given by a basis (columns), D by generators
// (columns) that must lie in K.
inline AbelianGroup lattice_quotient(const IntMatrix& k_basis, const IntMatrix& d_gens) {
  if (k_basis.cols() == 0) return AbelianGroup();
  if (d_gens.cols() == 0) return AbelianGroup::free(k_basis.cols());
  auto x = solve_columns(k_basis, d_gens);
  if (!x) throw std::logic_error("lattice_quotient: denominator not inside numerator");
  return AbelianGroup::from_quotient(k_basis.cols(), *x);
}

}  // namespace orb

#endif  // ORB_ABELIAN_HPP_
