#ifndef ORB_FOX_HPP_
#define ORB_FOX_HPP_

// Fox calculus evaluated in a matrix representation. The left-to-right
// convention d(gw) = dg + g.dw fixes all signs; for an inverse letter the
// running prefix is advanced before the (negated) term is emitted.

#include <vector>

#include "orb/int_linalg.hpp"
#include "orb/module.hpp"

namespace orb {

inline IntMatrix action_of_letter(const CoefficientModule& coeff, int letter) {
  const IntMatrix& a = coeff.matrix_of(std::abs(letter) - 1);
  return letter > 0 ? a : unimodular_inverse(a);
}

inline IntMatrix action_of_word(const CoefficientModule& coeff, const Word& w) {
  IntMatrix m = IntMatrix::identity(coeff.dim());
  for (int letter : w) m = m * action_of_letter(coeff, letter);
  return m;
}

// rho(dw/dg) for every generator g at once; result[i] is a dim x dim block.
inline std::vector<IntMatrix> fox_derivatives(const CoefficientModule& coeff,
                                              const Word& w, int generator_count) {
  int d = coeff.dim();
  std::vector<IntMatrix> result(static_cast<size_t>(generator_count), IntMatrix(d, d));
  IntMatrix prefix = IntMatrix::identity(d);
  for (int letter : w) {
    int g = std::abs(letter) - 1;
    if (letter > 0) {
      result[g] = result[g] + prefix;
      prefix = prefix * coeff.matrix_of(g);
    } else {
      prefix = prefix * unimodular_inverse(coeff.matrix_of(g));
      result[g] = result[g] - prefix;
    }
  }
  return result;
}

}  // namespace orb

#endif  // ORB_FOX_HPP_
