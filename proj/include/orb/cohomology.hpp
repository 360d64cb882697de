#ifndef ORB_COHOMOLOGY_HPP_
#define ORB_COHOMOLOGY_HPP_

// Low-degree group cohomology with twisted coefficients.
//
// Degrees 0 and 1 come from any finite presentation: cocycles are crossed
// homomorphisms cut out by Fox-derivative matrices of the relators,
// coboundaries are principal. Cohomology of a cochain complex of modules
// Z^d / torsion is computed by exact lattice arithmetic throughout.

#include <string>
#include <vector>

#include "orb/abelian.hpp"
#include "orb/f2.hpp"
#include "orb/fox.hpp"
#include "orb/module.hpp"

namespace orb {

// A finite complex C^0 -> C^1 -> ... of modules (Z^{dims[n]} mod torsion
// lattice); delta[n] maps C^n to C^{n+1}.
struct CochainComplex {
  std::vector<int> dims;
  std::vector<IntMatrix> delta;
  std::vector<IntMatrix> torsion;

  AbelianGroup cohomology(int n) const {
    int dim_n = dims.at(static_cast<size_t>(n));
    if (dim_n == 0) return AbelianGroup();
    IntMatrix kernel = IntMatrix::identity(dim_n);
    if (n + 1 < static_cast<int>(dims.size()) && dims[n + 1] > 0)
      kernel = preimage_lattice(delta.at(static_cast<size_t>(n)), torsion.at(static_cast<size_t>(n + 1)));
    IntMatrix denom(dim_n, 0);
    if (n > 0) denom = delta.at(static_cast<size_t>(n - 1));
    denom = denom.hcat(torsion.at(static_cast<size_t>(n)));
    return lattice_quotient(kernel, denom);
  }
};

namespace detail {

inline IntMatrix block_torsion(const CoefficientModule& coeff, int copies) {
  int d = coeff.dim();
  int t = static_cast<int>(coeff.torsion.size());
  IntMatrix l(d * copies, t * copies);
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < t; ++i)
      l.at(c * d + static_cast<int>(coeff.free_rank) + i, c * t + i) = coeff.torsion[i];
  return l;
}

}  // namespace detail

// The two-step complex A -> A^n -> A^m of a presentation.
inline CochainComplex presentation_complex(const Presentation& pres,
                                           const CoefficientModule& coeff) {
  int n = pres.generator_count();
  int m = static_cast<int>(pres.relators.size());
  int d = coeff.dim();

  CochainComplex c;
  c.dims = {d, n * d, m * d};
  c.torsion = {detail::block_torsion(coeff, 1), detail::block_torsion(coeff, n),
               detail::block_torsion(coeff, m)};

  IntMatrix d0(n * d, d);
  for (int i = 0; i < n; ++i) {
    IntMatrix block = coeff.matrix_of(i) - IntMatrix::identity(d);
    for (int r = 0; r < d; ++r)
      for (int cidx = 0; cidx < d; ++cidx) d0.at(i * d + r, cidx) = block.at(r, cidx);
  }
  IntMatrix d1(m * d, n * d);
  for (int j = 0; j < m; ++j) {
    auto fox = fox_derivatives(coeff, pres.relators[j], n);
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < d; ++r)
        for (int cidx = 0; cidx < d; ++cidx)
          d1.at(j * d + r, i * d + cidx) = fox[i].at(r, cidx);
  }
  c.delta = {d0, d1};
  return c;
}

inline AbelianGroup h0(const Presentation& pres, const CoefficientModule& coeff) {
  return presentation_complex(pres, coeff).cohomology(0);
}

inline AbelianGroup h1(const Presentation& pres, const CoefficientModule& coeff) {
  return presentation_complex(pres, coeff).cohomology(1);
}

// Cocycle representatives for H^1 classes: columns are generator-value
// tuples in A^n spanning Z^1 mod B^1 (the H^1 basis through the quotient).
struct H1Classes {
  AbelianGroup group;
  IntMatrix cocycles;  // (n*d) x rank-of-Z1 matrix; basis of the cocycle lattice
  IntMatrix coboundaries;
};

inline H1Classes h1_with_cocycles(const Presentation& pres, const CoefficientModule& coeff) {
  CochainComplex c = presentation_complex(pres, coeff);
  H1Classes out;
  out.cocycles = preimage_lattice(c.delta[1], c.torsion[2]);
  out.coboundaries = c.delta[0].hcat(c.torsion[1]);
  out.group = lattice_quotient(out.cocycles, out.coboundaries);
  return out;
}

// Hom(pi, F2) as the kernel of the mod-2 relator-exponent matrix; vectors
// index generator values, basis in deterministic echelon order.
inline std::vector<F2Vec> f2_h1_basis(const Presentation& pres) {
  int n = pres.generator_count();
  F2Matrix m(static_cast<int>(pres.relators.size()), n);
  for (size_t j = 0; j < pres.relators.size(); ++j)
    for (int letter : pres.relators[j]) m.at(static_cast<int>(j), std::abs(letter) - 1) ^= 1;
  return m.kernel();
}

inline std::uint8_t f2_eval_word(const F2Vec& hom, const Word& w) {
  std::uint8_t s = 0;
  for (int letter : w) s ^= hom[static_cast<size_t>(std::abs(letter) - 1)];
  return s;
}

// ---------------------------------------------------------------------------
// Known cohomology of the building blocks, degrees 0..3. These tables are
// the vertex inputs of Theorem 10's assembly; the h0/h1 operations recompute
// the overlapping degrees from presentations in the test suite.

enum class BlockTag { Z2FreeProduct, Free, ZxZ2, Z, SurfaceWithBoundary };

struct BlockSpec {
  BlockTag tag;
  Int z2_count = 0;   // number of Z/2 free factors
  Int free_rank = 0;  // rank of the free part
};

enum class CoeffKind { ZTrivial, Zu, F2 };

inline std::string to_string(CoeffKind k) {
  switch (k) {
    case CoeffKind::ZTrivial: return "Z";
    case CoeffKind::Zu: return "Zu";
    case CoeffKind::F2: return "F2";
  }
  return "?";
}

// For Zu the torsion generators always act by -1; any_negative_free records
// whether some infinite-order generator also does (this is all degree <= 1
// depends on).
struct CoeffPattern {
  CoeffKind kind = CoeffKind::ZTrivial;
  bool any_negative_free = false;
};

inline AbelianGroup known_cohomology(const BlockSpec& block, const CoeffPattern& coeff,
                                     int degree) {
  if (degree < 0 || degree > 3) throw std::invalid_argument("known_cohomology: degree 0..3 only");
  const Int k = block.z2_count;
  const Int q = block.free_rank;
  auto f2n = [](Int n) {
    AbelianGroup g = AbelianGroup::elementary_two(n);
    return g;
  };

  switch (block.tag) {
    case BlockTag::Z2FreeProduct:
    case BlockTag::Free:
    case BlockTag::SurfaceWithBoundary: {
      // Free product of k copies of Z/2 and a free group of rank q
      // (Z2FreeProduct: q = 0; Free: k = 0).
      Int kk = block.tag == BlockTag::Free ? 0 : k;
      Int qq = block.tag == BlockTag::Z2FreeProduct ? 0 : q;
      switch (coeff.kind) {
        case CoeffKind::ZTrivial:
          if (degree == 0) return AbelianGroup::free(1);
          if (degree == 1) return AbelianGroup::free(qq);
          if (degree == 2) return f2n(kk);
          return AbelianGroup();
        case CoeffKind::Zu: {
          bool nontrivial = kk > 0 || coeff.any_negative_free;
          if (!nontrivial) return known_cohomology(block, {CoeffKind::ZTrivial, false}, degree);
          if (degree == 0) return AbelianGroup();
          if (degree == 1) return AbelianGroup(kk + qq - 1, {2});
          if (degree == 2) return AbelianGroup();
          return f2n(kk);
        }
        case CoeffKind::F2:
          if (degree == 0) return f2n(1);
          if (degree == 1) return f2n(kk + qq);
          return f2n(kk);
      }
      break;
    }
    case BlockTag::Z: {
      switch (coeff.kind) {
        case CoeffKind::ZTrivial:
          if (degree <= 1) return AbelianGroup::free(1);
          return AbelianGroup();
        case CoeffKind::Zu:
          if (!coeff.any_negative_free)
            return known_cohomology(block, {CoeffKind::ZTrivial, false}, degree);
          if (degree == 1) return f2n(1);
          return AbelianGroup();
        case CoeffKind::F2:
          if (degree <= 1) return f2n(1);
          return AbelianGroup();
      }
      break;
    }
    case BlockTag::ZxZ2: {
      // Z + Z/2: tensor of the periodic resolution with the Z resolution.
      switch (coeff.kind) {
        case CoeffKind::ZTrivial:
          if (degree == 0 || degree == 1) return AbelianGroup::free(1);
          return f2n(1);
        case CoeffKind::Zu:
          // Reflection acts by -1; both loop twists give the same values.
          if (degree == 0) return AbelianGroup();
          return f2n(1);
        case CoeffKind::F2:
          if (degree == 0) return f2n(1);
          return f2n(2);
      }
      break;
    }
  }
  throw std::invalid_argument("known_cohomology: unsupported tag/pattern");
}

}  // namespace orb

#endif  // ORB_COHOMOLOGY_HPP_
