#ifndef ORB_VALIDATE_HPP_
#define ORB_VALIDATE_HPP_

// Admissibility of a signature as an S^2-orbifold bundle base: order-2 cone
// points, corner-free reflector circles, not the bad orbifold S(2), and the
// group must act on Z with torsion-free kernel. For the trivial group (the
// base S^2) the trivial homomorphism qualifies, although it is not an
// epimorphism and enumerate_actions returns nothing.

#include <string>
#include <vector>

#include "orb/action.hpp"
#include "orb/signature.hpp"

namespace orb {

struct ValidationViolation {
  std::string clause;
  std::string message;
  std::string citation;
};

struct ValidationResult {
  bool valid = true;
  std::vector<ValidationViolation> violations;
  std::vector<std::string> notes;
};

inline bool has_trivial_group(const OrbifoldSignature& sig) {
  // Among in-scope signatures only the plain sphere (and the bad S(2),
  // rejected before this is consulted) collapse to the trivial group.
  return sig.orientable && sig.genus == 0 && sig.circle_count() == 0 && sig.cone_count() <= 1;
}

inline ValidationResult validate_bundle_base(const OrbifoldSignature& sig) {
  ValidationResult res;
  auto reject = [&](const std::string& clause, const std::string& msg, const std::string& cite) {
    res.valid = false;
    res.violations.push_back({clause, msg, cite});
  };

  for (Int n : sig.cone_orders)
    if (n != 2) {
      reject("cone_order", "cone point of order " + std::to_string(n) +
                               "; bundle bases only carry cone points of order 2",
             "Lemma 2");
      break;
    }
  for (const auto& circle : sig.reflector_circles)
    if (!circle.empty()) {
      reject("corner_points", "reflector circle with corner points is not a bundle base",
             "Lemma 2");
      break;
    }
  if (sig.is_s2_one_cone()) {
    reject("bad_orbifold", "S(2) is a bad orbifold and cannot be a base", "Lemma 2");
  }
  if (!res.valid) return res;

  if (has_trivial_group(sig)) {
    res.notes.push_back(
        "trivial orbifold fundamental group: the trivial homomorphism has torsion-free "
        "kernel; no epimorphism to Z/2Z exists");
    return res;
  }
  Presentation pres = presentation(sig);
  if (enumerate_actions(pres).empty()) {
    reject("no_action",
           "no action with torsion-free kernel: the forced -1 values on torsion "
           "generators violate a relator",
           "Lemma 2");
  }
  return res;
}

}  // namespace orb

#endif  // ORB_VALIDATE_HPP_
