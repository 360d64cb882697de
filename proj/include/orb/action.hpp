#ifndef ORB_ACTION_HPP_
#define ORB_ACTION_HPP_

// Epimorphisms u : pi^orb(B) -> Z/2Z with torsion-free kernel. Every cone
// involution and reflection is forced to -1 (the torsion conjugacy classes
// must miss the kernel); the relators impose F2-linear constraints on the
// remaining generators; epimorphism means some value is -1.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orb/cohomology.hpp"
#include "orb/f2.hpp"
#include "orb/presentation.hpp"
#include "orb/signature.hpp"

namespace orb {

struct Action {
  std::vector<int> values;  // +1 / -1 per generator, presentation order

  int value(int gen) const { return values[static_cast<size_t>(gen)]; }

  int value_of_word(const Word& w) const {
    int v = 1;
    for (int letter : w) v *= values[static_cast<size_t>(std::abs(letter) - 1)];
    return v;
  }

  std::map<std::string, int> as_map(const Presentation& pres) const {
    std::map<std::string, int> m;
    for (int i = 0; i < pres.generator_count(); ++i) m[pres.generators[i].label] = values[i];
    return m;
  }

  std::string to_string(const Presentation& pres) const {
    std::ostringstream os;
    for (int i = 0; i < pres.generator_count(); ++i) {
      if (i) os << ",";
      os << pres.generators[i].label << "=" << (values[i] > 0 ? "+1" : "-1");
    }
    return os.str();
  }

  bool operator==(const Action& o) const { return values == o.values; }
  bool operator<(const Action& o) const { return values < o.values; }
};

inline bool action_satisfies_relators(const Presentation& pres, const Action& a) {
  for (const Word& r : pres.relators)
    if (a.value_of_word(r) != 1) return false;
  return true;
}

// All assignments with -1 on torsion generators, +1 products over relators,
// and at least one -1 value, in deterministic order.
inline std::vector<Action> enumerate_actions(const Presentation& pres) {
  int n = pres.generator_count();
  std::vector<int> free_gens;
  F2Vec forced(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (pres.is_torsion_generator(i)) forced[static_cast<size_t>(i)] = 1;
    else free_gens.push_back(i);
  }

  // Relator constraints on the free generators, constants from forced part.
  int m = static_cast<int>(pres.relators.size());
  F2Matrix sys(m, static_cast<int>(free_gens.size()) + 1);
  for (int j = 0; j < m; ++j) {
    F2Vec row(static_cast<size_t>(n), 0);
    for (int letter : pres.relators[static_cast<size_t>(j)])
      row[static_cast<size_t>(std::abs(letter) - 1)] ^= 1;
    std::uint8_t rhs = 0;
    for (int i = 0; i < n; ++i) rhs ^= static_cast<std::uint8_t>(row[static_cast<size_t>(i)] & forced[static_cast<size_t>(i)]);
    for (size_t fi = 0; fi < free_gens.size(); ++fi)
      sys.at(j, static_cast<int>(fi)) = row[static_cast<size_t>(free_gens[fi])];
    sys.at(j, static_cast<int>(free_gens.size())) = rhs;
  }

  // Solve the affine system: particular solution + kernel of the homogeneous
  // part, then enumerate the (small) solution space.
  int nf = static_cast<int>(free_gens.size());
  F2Matrix reduced = sys;
  reduced.rref();
  F2Vec particular(static_cast<size_t>(nf), 0);
  for (int i = 0; i < reduced.rows(); ++i) {
    int lead = -1;
    for (int c = 0; c <= nf; ++c)
      if (reduced.at(i, c)) {
        lead = c;
        break;
      }
    if (lead < 0) break;
    if (lead == nf) return {};  // inconsistent: no torsion-free-kernel action
    particular[static_cast<size_t>(lead)] = reduced.at(i, nf);
  }
  F2Matrix homo(m, nf);
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < nf; ++c) homo.at(i, c) = sys.at(i, c);
  std::vector<F2Vec> kernel = homo.kernel();

  if (kernel.size() > 20)
    throw std::invalid_argument(
        "action space too large to enumerate (more than 2^20 assignments); "
        "pass an explicit action instead");
  std::vector<Action> out;
  size_t count = size_t{1} << kernel.size();
  for (size_t mask = 0; mask < count; ++mask) {
    F2Vec sol = particular;
    for (size_t b = 0; b < kernel.size(); ++b)
      if (mask & (size_t{1} << b)) f2_add_into(sol, kernel[b]);
    Action a;
    a.values.assign(static_cast<size_t>(n), 1);
    bool epi = false;
    for (int i = 0; i < n; ++i)
      if (forced[static_cast<size_t>(i)]) {
        a.values[static_cast<size_t>(i)] = -1;
        epi = true;
      }
    for (size_t fi = 0; fi < free_gens.size(); ++fi)
      if (sol[fi]) {
        a.values[static_cast<size_t>(free_gens[fi])] = -1;
        epi = true;
      }
    if (!epi) continue;
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class CurveTwist { Untwisted, Twisted };

inline std::string to_string(CurveTwist t) {
  return t == CurveTwist::Twisted ? "twisted" : "untwisted";
}

// A reflector curve is u-twisted when the nonsingular double cover of its
// neighbourhood is the Moebius band, i.e. u(z_j) = -1 on its boundary loop.
inline std::vector<CurveTwist> classify_reflector_curves(const Presentation& pres,
                                                         const Action& action) {
  std::vector<CurveTwist> twists;
  for (int i = 0; i < pres.generator_count(); ++i)
    if (pres.generators[i].role == GeneratorRole::BoundaryLoop)
      twists.push_back(action.value(i) < 0 ? CurveTwist::Twisted : CurveTwist::Untwisted);
  return twists;
}

// Cone points plus u-twisted reflector curves must be even.
inline bool parity_check(const OrbifoldSignature& sig, const Presentation& pres,
                         const Action& action) {
  Int twisted = 0;
  for (CurveTwist t : classify_reflector_curves(pres, action))
    if (t == CurveTwist::Twisted) ++twisted;
  return (sig.cone_count() + twisted) % 2 == 0;
}

// Parse the CLI action literal "label=+1,label=-1,...". A bare family prefix
// (e.g. "z=+1") assigns every generator whose label starts with it followed
// by digits. Omitted torsion generators default to -1.
inline Action parse_action_literal(const Presentation& pres, const std::string& text) {
  Action a;
  a.values.assign(static_cast<size_t>(pres.generator_count()), 0);
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("action literal item missing '=': " + item);
    std::string label = item.substr(0, eq);
    std::string rhs = item.substr(eq + 1);
    int v;
    if (rhs == "+1" || rhs == "1") v = 1;
    else if (rhs == "-1") v = -1;
    else throw std::invalid_argument("action value must be +1 or -1: " + item);
    bool matched = false;
    for (int i = 0; i < pres.generator_count(); ++i) {
      const std::string& gl = pres.generators[i].label;
      bool exact = gl == label;
      bool family = !exact && gl.size() > label.size() &&
                    gl.compare(0, label.size(), label) == 0 &&
                    std::isdigit(static_cast<unsigned char>(gl[label.size()]));
      if (exact || family) {
        a.values[static_cast<size_t>(i)] = v;
        matched = true;
      }
    }
    if (!matched) throw std::invalid_argument("unknown generator label: " + label);
  }
  for (int i = 0; i < pres.generator_count(); ++i) {
    if (a.values[static_cast<size_t>(i)] != 0) continue;
    if (pres.is_torsion_generator(i)) a.values[static_cast<size_t>(i)] = -1;
    else
      throw std::invalid_argument("no value given for generator " + pres.generators[i].label);
  }
  return a;
}

}  // namespace orb

#endif  // ORB_ACTION_HPP_
