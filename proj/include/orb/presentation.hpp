#ifndef ORB_PRESENTATION_HPP_
#define ORB_PRESENTATION_HPP_

// Finite presentations with generator roles, and the standard presentation
// of the orbifold fundamental group of a signature.
//
// A word is a sequence of nonzero ints: +(-)(i+1) means generator i (or its
// inverse). Generator order for signature presentations is fixed: handles
// a1,b1,...  (or crosscaps v1,...), then cones x1,..., then per reflector
// circle its boundary loop z_j followed by the reflection c_j.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orb/abelian.hpp"
#include "orb/signature.hpp"

namespace orb {

using Word = std::vector<int>;

inline Word word_inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

inline Word word_concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Word free_reduce(const Word& w) {
  Word r;
  for (int letter : w) {
    if (!r.empty() && r.back() == -letter) r.pop_back();
    else r.push_back(letter);
  }
  return r;
}

enum class GeneratorRole { HandleA, HandleB, Crosscap, Cone, BoundaryLoop, Reflection, Free };

inline std::string to_string(GeneratorRole r) {
  switch (r) {
    case GeneratorRole::HandleA: return "handle_a";
    case GeneratorRole::HandleB: return "handle_b";
    case GeneratorRole::Crosscap: return "crosscap";
    case GeneratorRole::Cone: return "cone";
    case GeneratorRole::BoundaryLoop: return "boundary_loop";
    case GeneratorRole::Reflection: return "reflection";
    case GeneratorRole::Free: return "free";
  }
  return "?";
}

struct Generator {
  std::string label;
  GeneratorRole role;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  int add_generator(const std::string& label, GeneratorRole role) {
    generators.push_back({label, role});
    return static_cast<int>(generators.size()) - 1;
  }

  int generator_count() const { return static_cast<int>(generators.size()); }

  int index_of(const std::string& label) const {
    for (size_t i = 0; i < generators.size(); ++i)
      if (generators[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator label: " + label);
  }

  // Torsion generator = flagged representative of a finite-order conjugacy
  // class (cone involutions and reflections).
  bool is_torsion_generator(int i) const {
    return generators[i].role == GeneratorRole::Cone ||
           generators[i].role == GeneratorRole::Reflection;
  }

  std::string word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (int letter : w) {
      os << generators[std::abs(letter) - 1].label;
      if (letter < 0) os << "^-1 ";
      else os << " ";
    }
    std::string s = os.str();
    if (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  }

  // Exponent-sum matrix: one column per relator, rows indexed by generators.
  IntMatrix relator_exponent_matrix() const {
    IntMatrix m(generator_count(), static_cast<int>(relators.size()));
    for (size_t j = 0; j < relators.size(); ++j)
      for (int letter : relators[j]) {
        int g = std::abs(letter) - 1;
        m.at(g, static_cast<int>(j)) += letter > 0 ? 1 : -1;
      }
    return m;
  }

  AbelianGroup abelianization() const {
    return AbelianGroup::from_quotient(generator_count(), relator_exponent_matrix());
  }
};

struct OutOfScopeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Standard presentation of pi^orb(B) for in-scope signatures: torsion
// relators x_i^2, reflection relators c_j^2 and [c_j, z_j], and one global
// relator  x_1..x_k z_1..z_r (product of handle commutators | crosscap
// squares).
inline Presentation presentation(const OrbifoldSignature& sig) {
  if (!sig.all_cones_order_two())
    throw OutOfScopeError("cone orders greater than 2 are out of scope");
  if (sig.has_corners())
    throw OutOfScopeError("reflector circles with corner points are out of scope");

  Presentation p;
  std::vector<int> handles_a, handles_b, crosscaps, cones, loops, reflections;
  if (sig.orientable) {
    for (Int i = 1; i <= sig.genus; ++i) {
      handles_a.push_back(p.add_generator("a" + std::to_string(i), GeneratorRole::HandleA));
      handles_b.push_back(p.add_generator("b" + std::to_string(i), GeneratorRole::HandleB));
    }
  } else {
    for (Int i = 1; i <= sig.genus; ++i)
      crosscaps.push_back(p.add_generator("v" + std::to_string(i), GeneratorRole::Crosscap));
  }
  for (Int i = 1; i <= sig.cone_count(); ++i)
    cones.push_back(p.add_generator("x" + std::to_string(i), GeneratorRole::Cone));
  for (Int j = 1; j <= sig.circle_count(); ++j) {
    loops.push_back(p.add_generator("z" + std::to_string(j), GeneratorRole::BoundaryLoop));
    reflections.push_back(p.add_generator("c" + std::to_string(j), GeneratorRole::Reflection));
  }

  auto pos = [](int idx) { return idx + 1; };

  for (int x : cones) p.relators.push_back({pos(x), pos(x)});
  for (size_t j = 0; j < reflections.size(); ++j) {
    int c = pos(reflections[j]), z = pos(loops[j]);
    p.relators.push_back({c, c});
    p.relators.push_back({c, z, -c, -z});
  }

  Word global;
  for (int x : cones) global.push_back(pos(x));
  for (int z : loops) global.push_back(pos(z));
  if (sig.orientable) {
    for (size_t i = 0; i < handles_a.size(); ++i) {
      int a = pos(handles_a[i]), b = pos(handles_b[i]);
      global.push_back(a);
      global.push_back(b);
      global.push_back(-a);
      global.push_back(-b);
    }
  } else {
    for (int v : crosscaps) {
      global.push_back(pos(v));
      global.push_back(pos(v));
    }
  }
  p.relators.push_back(global);
  return p;
}

}  // namespace orb

#endif  // ORB_PRESENTATION_HPP_
