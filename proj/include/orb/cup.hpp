#ifndef ORB_CUP_HPP_
#define ORB_CUP_HPP_

// Cup products of degree-one mod-2 classes on presentation 2-complexes.
//
// Staircase evaluation on a 2-cell attached along a word: each positive
// letter g at position i contributes A(prefix before i) * B(g), each inverse
// letter g^{-1} contributes A(prefix through i) * B(g). Over F2 this is the
// bar-resolution formula; A(g^{-1}) = A(g).
//
// On a surface group presented by Reidemeister-Schreier rewriting the
// presentation has several 2-cells; the fundamental class is represented by
// any mod-2 cycle of cells on which the induced pairing of Hom(kappa,F2) is
// nondegenerate (degree-one cup products vanish on spherical cycles, so the
// value does not depend on the choice).

#include <optional>
#include <vector>

#include "orb/cohomology.hpp"
#include "orb/cover.hpp"

namespace orb {

inline std::uint8_t cup_eval_cell(const Word& w, const F2Vec& a, const F2Vec& b) {
  std::uint8_t total = 0;
  std::uint8_t prefix = 0;
  for (int letter : w) {
    size_t g = static_cast<size_t>(std::abs(letter) - 1);
    if (letter > 0) {
      total ^= static_cast<std::uint8_t>(prefix & b[g]);
      prefix ^= a[g];
    } else {
      prefix ^= a[g];
      total ^= static_cast<std::uint8_t>(prefix & b[g]);
    }
  }
  return total;
}

inline std::uint8_t cup_eval_cycle(const Presentation& pres, const F2Vec& cycle,
                                   const F2Vec& a, const F2Vec& b) {
  std::uint8_t total = 0;
  for (size_t j = 0; j < pres.relators.size(); ++j)
    if (cycle[j]) total ^= cup_eval_cell(pres.relators[j], a, b);
  return total;
}

// Mod-2 two-cycles of the presentation complex: combinations of relator
// cells with vanishing total boundary.
inline std::vector<F2Vec> relator_cycle_space(const Presentation& pres) {
  int n = pres.generator_count();
  int m = static_cast<int>(pres.relators.size());
  F2Matrix boundary(n, m);
  for (int j = 0; j < m; ++j)
    for (int letter : pres.relators[static_cast<size_t>(j)])
      boundary.at(std::abs(letter) - 1, j) ^= 1;
  return boundary.kernel();
}

// The cup pairing of Hom(pi1, F2) against the fundamental class, for a
// presentation of a closed surface group. Throws InternalError when no cycle
// carries a nondegenerate form or two nondegenerate choices disagree.
struct SurfaceCupForm {
  std::vector<F2Vec> h1_basis;
  F2Matrix pairing;  // symmetric, nondegenerate
  F2Vec fundamental_cycle;

  // <x cup y, [surface]> for classes given in h1_basis coordinates.
  std::uint8_t pair_coords(const F2Vec& xc, const F2Vec& yc) const {
    std::uint8_t s = 0;
    for (size_t i = 0; i < xc.size(); ++i)
      for (size_t j = 0; j < yc.size(); ++j)
        if (xc[i] && yc[j]) s ^= pairing.at(static_cast<int>(i), static_cast<int>(j));
    return s;
  }
};

inline SurfaceCupForm surface_cup_form(const Presentation& pres) {
  SurfaceCupForm form;
  form.h1_basis = f2_h1_basis(pres);
  int dim = static_cast<int>(form.h1_basis.size());
  auto cycles = relator_cycle_space(pres);

  bool found = false;
  for (const F2Vec& cycle : cycles) {
    F2Matrix pairing(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        pairing.at(i, j) =
            cup_eval_cycle(pres, cycle, form.h1_basis[static_cast<size_t>(i)],
                           form.h1_basis[static_cast<size_t>(j)]);
    if (pairing.rank() == dim && dim > 0) {
      if (found) {
        // Two fundamental representatives must induce the same form.
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j)
            if (pairing.at(i, j) != form.pairing.at(i, j))
              throw InternalError("cup pairing differs between nondegenerate cycles");
      } else {
        form.pairing = pairing;
        form.fundamental_cycle = cycle;
        found = true;
      }
    }
  }
  if (!found)
    throw InternalError("no relator cycle carries a nondegenerate cup pairing");
  return form;
}

// Cup square of a class on a one-relator closed-surface presentation
// (every generator occurs exactly twice in the single relator).
inline std::uint8_t cup_square_surface(const Presentation& pres, const F2Vec& hom) {
  if (pres.relators.size() != 1)
    throw std::invalid_argument("cup_square_surface: exactly one relator required");
  std::vector<int> occurrences(static_cast<size_t>(pres.generator_count()), 0);
  for (int letter : pres.relators[0]) ++occurrences[static_cast<size_t>(std::abs(letter) - 1)];
  for (int c : occurrences)
    if (c != 2)
      throw std::invalid_argument(
          "cup_square_surface: not a closed-surface presentation (each "
          "generator must occur exactly twice in the relator)");
  if (f2_eval_word(hom, pres.relators[0]) != 0)
    throw std::invalid_argument("cup_square_surface: class is not a homomorphism");
  return cup_eval_cell(pres.relators[0], hom, hom);
}

}  // namespace orb

#endif  // ORB_CUP_HPP_
