#ifndef ORB_COVER_HPP_
#define ORB_COVER_HPP_

// Index-two subgroup presentations by Reidemeister-Schreier rewriting, and
// the kernel double cover of a signature: chi doubles, and the surface is
// recognized from chi together with the abelianization of the rewritten
// presentation.

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orb/action.hpp"

namespace orb {

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct SurfaceDescriptor {
  bool orientable = true;
  Int genus = 0;  // crosscap count when non-orientable
  Int euler_characteristic = 2;

  bool operator==(const SurfaceDescriptor& o) const {
    return orientable == o.orientable && genus == o.genus &&
           euler_characteristic == o.euler_characteristic;
  }

  std::string name() const {
    if (orientable) {
      if (genus == 0) return "S2";
      if (genus == 1) return "torus";
      return "orientable genus " + std::to_string(genus);
    }
    if (genus == 1) return "RP2";
    if (genus == 2) return "Klein bottle";
    return "non-orientable genus " + std::to_string(genus);
  }

  static SurfaceDescriptor orientable_genus(Int h) { return {true, h, 2 - 2 * h}; }
  static SurfaceDescriptor non_orientable_genus(Int g) { return {false, g, 2 - g}; }
};

// Schreier transversal {1, t0} with t0 the first generator carrying -1.
// Schreier generators are gamma(t, g) = t g rep(tg)^{-1}; gamma(1, t0) is
// trivial and omitted. Rewriting uses free reduction only.
class DoubleCoverRewriter {
 public:
  DoubleCoverRewriter(const Presentation& pres, const Action& action)
      : pres_(pres), action_(action) {
    t0_ = -1;
    for (int i = 0; i < pres.generator_count(); ++i)
      if (action.value(i) < 0) {
        t0_ = i;
        break;
      }
    if (t0_ < 0) throw std::invalid_argument("action is trivial: no index-two kernel");

    // Schreier generator table: index_[coset][gen] -> kernel generator id.
    index_.assign(2, std::vector<int>(static_cast<size_t>(pres.generator_count()), -1));
    for (int coset = 0; coset < 2; ++coset)
      for (int g = 0; g < pres.generator_count(); ++g) {
        if (coset == 0 && g == t0_) continue;
        index_[static_cast<size_t>(coset)][static_cast<size_t>(g)] =
            kernel_pres_.add_generator(schreier_label(coset, g), GeneratorRole::Free);
        origin_.push_back({coset, g});
      }
    for (const Word& r : pres.relators) {
      kernel_pres_.relators.push_back(rewrite(r, 0));
      kernel_pres_.relators.push_back(rewrite(r, 1));
    }
  }

  const Presentation& kernel_presentation() const { return kernel_pres_; }
  int transversal_generator() const { return t0_; }

  // Rewrite a pi-word with u(word) = +1 as a word in the Schreier generators,
  // reading from the given start coset.
  Word rewrite(const Word& w, int start_coset) const {
    Word out;
    int coset = start_coset;
    for (int letter : w) {
      int g = std::abs(letter) - 1;
      int move = action_.value(g) < 0 ? 1 : 0;
      if (letter > 0) {
        int id = index_[static_cast<size_t>(coset)][static_cast<size_t>(g)];
        if (id >= 0) out.push_back(id + 1);
        coset ^= move;
      } else {
        coset ^= move;
        int id = index_[static_cast<size_t>(coset)][static_cast<size_t>(g)];
        if (id >= 0) out.push_back(-(id + 1));
      }
    }
    if (coset != start_coset)
      throw std::invalid_argument("rewritten word does not lie in the kernel");
    return free_reduce(out);
  }

  // The pi-word a Schreier generator stands for.
  Word schreier_word(int kernel_gen) const {
    auto [coset, g] = origin_[static_cast<size_t>(kernel_gen)];
    Word w;
    if (coset == 1) w.push_back(t0_ + 1);
    w.push_back(g + 1);
    // Trailing t0^{-1} exactly when tg leaves the start coset of the
    // transversal representative.
    bool lands_in_t0 = (coset == 1) ^ (action_.value(g) < 0);
    if (lands_in_t0) w.push_back(-(t0_ + 1));
    return w;
  }

 private:
  std::string schreier_label(int coset, int g) const {
    return pres_.generators[static_cast<size_t>(g)].label + (coset == 0 ? "" : "'");
  }

  const Presentation& pres_;
  const Action& action_;
  int t0_;
  Presentation kernel_pres_;
  std::vector<std::vector<int>> index_;
  std::vector<std::pair<int, int>> origin_;
};

// Identify the closed surface with fundamental group Ker(u).
inline SurfaceDescriptor kernel_double_cover(const OrbifoldSignature& sig,
                                             const Presentation& pres, const Action& action) {
  Rational chi2 = euler_characteristic(sig) * Rational(2);
  if (!chi2.is_integer())
    throw InternalError("doubled Euler characteristic is not an integer");
  Int chi = chi2.num();

  DoubleCoverRewriter rw(pres, action);
  AbelianGroup h1 = rw.kernel_presentation().abelianization();

  if (h1.invariant_factors.empty() && chi == 2 - h1.free_rank && h1.free_rank % 2 == 0) {
    return SurfaceDescriptor::orientable_genus(h1.free_rank / 2);
  }
  if (h1.invariant_factors == std::vector<Int>{2} && chi == 2 - (h1.free_rank + 1)) {
    return SurfaceDescriptor::non_orientable_genus(h1.free_rank + 1);
  }
  throw InternalError("kernel abelianization " + h1.to_string() +
                      " contradicts chi doubling (chi = " + std::to_string(chi) + ")");
}

// ---------------------------------------------------------------------------
// Action classes. Implemented symmetries: permutations of reflector circles,
// permutations of cones (value-trivial), permutations of crosscaps, the
// symplectic group on handle values mod 2 (transitive on nonzero vectors),
// plus the identification of P(2,2)'s two raw actions (unique up to Aut(pi)).
// Classes these moves do not merge are only known distinct up to the
// implemented symmetries.

struct ActionClass {
  Action representative;
  std::vector<Action> members;
  SurfaceDescriptor kernel;
  std::vector<CurveTwist> twists;          // sorted multiset
  bool distinctness_certified = false;     // fingerprints differ from all other classes
};

namespace detail {

struct ActionOrbitKey {
  std::vector<int> sorted_crosscaps;
  bool handles_nonzero = false;
  std::vector<int> sorted_loops;
  std::vector<int> cones;

  bool operator<(const ActionOrbitKey& o) const {
    return std::tie(sorted_crosscaps, handles_nonzero, sorted_loops, cones) <
           std::tie(o.sorted_crosscaps, o.handles_nonzero, o.sorted_loops, o.cones);
  }
  bool operator==(const ActionOrbitKey& o) const {
    return !(*this < o) && !(o < *this);
  }
};

inline ActionOrbitKey orbit_key(const Presentation& pres, const Action& a) {
  ActionOrbitKey key;
  for (int i = 0; i < pres.generator_count(); ++i) {
    switch (pres.generators[i].role) {
      case GeneratorRole::Crosscap: key.sorted_crosscaps.push_back(a.value(i)); break;
      case GeneratorRole::HandleA:
      case GeneratorRole::HandleB:
        if (a.value(i) < 0) key.handles_nonzero = true;
        break;
      case GeneratorRole::BoundaryLoop: key.sorted_loops.push_back(a.value(i)); break;
      case GeneratorRole::Cone: key.cones.push_back(a.value(i)); break;
      default: break;
    }
  }
  std::sort(key.sorted_crosscaps.begin(), key.sorted_crosscaps.end());
  std::sort(key.sorted_loops.begin(), key.sorted_loops.end());
  return key;
}

// P(2,2): the action is unique up to an automorphism of Z *_Z D.
inline bool merge_all_actions(const OrbifoldSignature& sig) {
  return !sig.orientable && sig.genus == 1 && sig.cone_count() == 2 &&
         sig.circle_count() == 0 && sig.all_cones_order_two();
}

}  // namespace detail

inline std::vector<ActionClass> dedup_actions(const OrbifoldSignature& sig,
                                              const Presentation& pres,
                                              const std::vector<Action>& actions) {
  std::vector<ActionClass> classes;
  std::vector<detail::ActionOrbitKey> keys;
  bool merge_all = detail::merge_all_actions(sig);

  for (const Action& a : actions) {
    detail::ActionOrbitKey key = detail::orbit_key(pres, a);
    SurfaceDescriptor kernel = kernel_double_cover(sig, pres, a);
    auto twists = classify_reflector_curves(pres, a);
    std::sort(twists.begin(), twists.end());

    bool placed = false;
    for (size_t c = 0; c < classes.size(); ++c) {
      if (merge_all || keys[c] == key) {
        // Fingerprint soundness: a merge may never identify actions with
        // different kernel covers or twist multisets.
        if (!(classes[c].kernel == kernel))
          throw InternalError("dedup merged actions with different kernel covers");
        if (classes[c].twists != twists)
          throw InternalError("dedup merged actions with different twist multisets");
        classes[c].members.push_back(a);
        placed = true;
        break;
      }
    }
    if (!placed) {
      ActionClass cls;
      cls.representative = a;
      cls.members = {a};
      cls.kernel = kernel;
      cls.twists = twists;
      classes.push_back(cls);
      keys.push_back(key);
    }
  }

  // Classes whose fingerprints differ from every other class are provably
  // distinct as (pi, u) pairs; the rest are distinct only up to the
  // implemented symmetries.
  for (size_t i = 0; i < classes.size(); ++i) {
    bool unique_fp = true;
    for (size_t j = 0; j < classes.size(); ++j)
      if (j != i && classes[j].kernel == classes[i].kernel &&
          classes[j].twists == classes[i].twists)
        unique_fp = false;
    classes[i].distinctness_certified = unique_fp;
  }
  return classes;
}

}  // namespace orb

#endif  // ORB_COVER_HPP_
