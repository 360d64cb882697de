#ifndef ORB_MODULE_HPP_
#define ORB_MODULE_HPP_

// Finitely generated coefficient modules Z^rank + torsion with a group
// action given per generator. The in-scope modules are Z (trivial), Z^u
// (rank 1, generator acts by u = +-1) and F2 (torsion (2), trivial action).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orb/int_linalg.hpp"
#include "orb/presentation.hpp"

namespace orb {

struct CoefficientModule {
  Int free_rank = 0;
  std::vector<Int> torsion;             // invariant factors, each >= 2
  std::vector<IntMatrix> action;        // one matrix per presentation generator

  int dim() const { return static_cast<int>(free_rank + torsion.size()); }

  // Columns d_i * e_{free_rank + i}: the relations defining the module.
  IntMatrix torsion_lattice() const {
    IntMatrix l(dim(), static_cast<int>(torsion.size()));
    for (size_t i = 0; i < torsion.size(); ++i)
      l.at(static_cast<int>(free_rank + i), static_cast<int>(i)) = torsion[i];
    return l;
  }

  const IntMatrix& matrix_of(int gen) const { return action.at(static_cast<size_t>(gen)); }

  static CoefficientModule trivial_z(const Presentation& p) {
    CoefficientModule m;
    m.free_rank = 1;
    m.action.assign(p.generators.size(), IntMatrix::identity(1));
    return m;
  }

  // Z twisted by signs: values[i] = +-1 per generator.
  static CoefficientModule twisted_z(const Presentation& p, const std::vector<int>& values) {
    if (values.size() != p.generators.size())
      throw std::invalid_argument("twisted_z: one sign per generator required");
    CoefficientModule m;
    m.free_rank = 1;
    for (int v : values) {
      IntMatrix a(1, 1);
      a.at(0, 0) = v;
      m.action.push_back(a);
    }
    return m;
  }

  static CoefficientModule f2(const Presentation& p) {
    CoefficientModule m;
    m.free_rank = 0;
    m.torsion = {2};
    m.action.assign(p.generators.size(), IntMatrix::identity(1));
    return m;
  }
};

}  // namespace orb

#endif  // ORB_MODULE_HPP_
