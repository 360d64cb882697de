#ifndef ORB_TESTS_CORPUS_HPP_
#define ORB_TESTS_CORPUS_HPP_

// Deterministic signature corpora shared by the property tests.

#include <vector>

#include "orb/validate.hpp"

namespace orb::test {

// Every in-scope admissible bundle base with genus <= max_genus, k <= max_k,
// r <= max_r (order-2 cones, corner-free circles), in enumeration order.
inline std::vector<OrbifoldSignature> admissible_corpus(Int max_genus, Int max_k, Int max_r) {
  std::vector<OrbifoldSignature> out;
  for (int orient = 1; orient >= 0; --orient)
    for (Int genus = orient ? 0 : 1; genus <= max_genus; ++genus)
      for (Int k = 0; k <= max_k; ++k)
        for (Int r = 0; r <= max_r; ++r) {
          OrbifoldSignature sig;
          sig.orientable = orient != 0;
          sig.genus = genus;
          sig.cone_orders.assign(static_cast<size_t>(k), 2);
          sig.reflector_circles.assign(static_cast<size_t>(r), {});
          if (!validate_bundle_base(sig).valid) continue;
          out.push_back(sig);
        }
  return out;
}

// Admissible bases with chi <= 0 and nonempty singular locus, the domain of
// the closed forms.
inline std::vector<OrbifoldSignature> aspherical_singular_corpus(Int max_genus, Int max_k,
                                                                 Int max_r) {
  std::vector<OrbifoldSignature> out;
  for (const auto& sig : admissible_corpus(max_genus, max_k, max_r)) {
    if (sig.singular_locus_empty()) continue;
    if (euler_characteristic(sig).sign() > 0) continue;
    out.push_back(sig);
  }
  return out;
}

}  // namespace orb::test

#endif  // ORB_TESTS_CORPUS_HPP_
