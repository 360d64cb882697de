#ifndef ORB_RESTRICTION_HPP_
#define ORB_RESTRICTION_HPP_

// Restriction of mod-2 first cohomology to the index-two kernel, plus the
// involution theta(A)(k) = A(t0 k t0^{-1}) whose kernel/image dimensions
// drive the Betti-number bookkeeping.

#include <vector>

#include "orb/cohomology.hpp"
#include "orb/cover.hpp"

namespace orb {

struct RestrictionData {
  std::vector<F2Vec> pi_basis;     // basis of Hom(pi, F2), generator-value vectors
  std::vector<F2Vec> kappa_basis;  // basis of Hom(kappa, F2), Schreier-generator values
  F2Matrix matrix;                 // restriction in those bases (kappa coords x pi coords)
  int theta_kernel_dim = 0;        // r in the Betti bookkeeping
  int theta_image_dim = 0;         // s
};

inline RestrictionData restriction_h1(const Presentation& pres, const Action& action) {
  RestrictionData out;
  out.pi_basis = f2_h1_basis(pres);

  DoubleCoverRewriter rw(pres, action);
  const Presentation& kpres = rw.kernel_presentation();
  out.kappa_basis = f2_h1_basis(kpres);

  int nk = kpres.generator_count();

  // Restrict each pi-class: value on a Schreier generator is the value of
  // the pi-word it stands for.
  out.matrix = F2Matrix(static_cast<int>(out.kappa_basis.size()),
                        static_cast<int>(out.pi_basis.size()));
  for (size_t b = 0; b < out.pi_basis.size(); ++b) {
    F2Vec values(static_cast<size_t>(nk), 0);
    for (int s = 0; s < nk; ++s)
      values[static_cast<size_t>(s)] = f2_eval_word(out.pi_basis[b], rw.schreier_word(s));
    F2Vec coords = f2_coordinates(out.kappa_basis, values);
    for (size_t i = 0; i < coords.size(); ++i)
      out.matrix.at(static_cast<int>(i), static_cast<int>(b)) = coords[i];
  }

  // theta on Hom(kappa, F2) via conjugation by the transversal generator.
  int t0 = rw.transversal_generator();
  Word t0w = {t0 + 1}, t0w_inv = {-(t0 + 1)};
  F2Matrix conj(nk, nk);  // row s: exponent vector of t0 w_s t0^{-1} in kappa
  for (int s = 0; s < nk; ++s) {
    Word conjugated = word_concat(word_concat(t0w, rw.schreier_word(s)), t0w_inv);
    Word rewritten = rw.rewrite(conjugated, 0);
    for (int letter : rewritten) conj.at(s, std::abs(letter) - 1) ^= 1;
  }
  // In the kappa basis: theta(A) has values conj . A on Schreier generators.
  std::vector<F2Vec> theta_plus_one_cols;
  for (const F2Vec& a : out.kappa_basis) {
    F2Vec theta_a = conj.apply(a);
    f2_add_into(theta_a, a);
    theta_plus_one_cols.push_back(f2_coordinates(out.kappa_basis, theta_a));
  }
  int dim = static_cast<int>(out.kappa_basis.size());
  F2Matrix tp1(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) tp1.at(r, c) = theta_plus_one_cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
  out.theta_image_dim = tp1.rank();
  out.theta_kernel_dim = dim - out.theta_image_dim;
  return out;
}

}  // namespace orb

#endif  // ORB_RESTRICTION_HPP_
