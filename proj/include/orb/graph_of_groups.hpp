#ifndef ORB_GRAPH_OF_GROUPS_HPP_
#define ORB_GRAPH_OF_GROUPS_HPP_

// Degree 2 and 3 cohomology of orbifold groups through their graph-of-groups
// decompositions. No general algorithm computes H^{>=2} from a bare
// presentation; here the group is split along the singular locus exactly as
// in the decision procedure's proof, and the Mayer-Vietoris assembly is run
// at cochain level: the total complex of induced free resolutions, glued by
// Fox-derivative chain maps over the (always infinite cyclic) edge groups.
// Edge groups have 2-term resolutions, so the chain maps stop at degree 1
// and no extension ambiguity is left over from the long exact sequence.

#include <optional>
#include <string>
#include <vector>

#include "orb/action.hpp"
#include "orb/cohomology.hpp"
#include "orb/cover.hpp"

namespace orb {

// Formal Z-combination of words in a vertex group's generators.
struct GroupRingTerm {
  Int coeff;
  Word word;
};
using GroupRingElem = std::vector<GroupRingTerm>;

namespace gog_detail {

inline GroupRingElem gen_minus_one(int g) {
  return {{1, {g + 1}}, {-1, {}}};
}
inline GroupRingElem gen_plus_one(int g) {
  return {{1, {g + 1}}, {1, {}}};
}
inline GroupRingElem one_minus_gen(int g) {
  return {{1, {}}, {-1, {g + 1}}};
}

inline IntMatrix evaluate(const CoefficientModule& coeff, const GroupRingElem& e) {
  int d = coeff.dim();
  IntMatrix m(d, d);
  for (const auto& term : e) {
    IntMatrix w = action_of_word(coeff, term.word);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) += term.coeff * w.at(i, j);
  }
  return m;
}

}  // namespace gog_detail

// Free resolution of Z over ZG in degrees 0..4; diff[n] is the matrix of
// d : P_n -> P_{n-1} with group-ring entries (dims[n-1] rows, dims[n] cols).
struct Resolution {
  std::vector<int> dims;
  std::vector<std::vector<std::vector<GroupRingElem>>> diff;  // index 1..4
};

struct GogVertex {
  BlockTag tag;
  std::vector<std::string> labels;
  std::vector<bool> torsion;  // Z/2 free-factor generators
  std::vector<int> u;         // +-1 per generator

  int generator_count() const { return static_cast<int>(labels.size()); }

  Resolution resolution() const {
    Resolution res;
    int n = generator_count();
    std::vector<int> tors;
    for (int i = 0; i < n; ++i)
      if (torsion[static_cast<size_t>(i)]) tors.push_back(i);

    if (tag == BlockTag::ZxZ2) {
      // Tensor of the periodic Z/2 resolution (generator c) with the 2-term
      // Z resolution (generator z). Generator order is fixed: [z, c].
      if (n != 2 || torsion[0] || !torsion[1])
        throw std::logic_error("ZxZ2 vertex must have generators [loop, reflection]");
      const int z = 0, c = 1;
      using gog_detail::gen_minus_one;
      using gog_detail::gen_plus_one;
      using gog_detail::one_minus_gen;
      res.dims = {1, 2, 2, 2, 2};
      res.diff.resize(5);
      res.diff[1] = {{gen_minus_one(z), gen_minus_one(c)}};
      // P2 = [a2*b0, a1*b1], P1 = [e_z, e_c].
      res.diff[2] = {{{}, gen_minus_one(c)}, {gen_plus_one(c), one_minus_gen(z)}};
      // P3 = [a3*b0, a2*b1], P2 rows [a2*b0, a1*b1].
      res.diff[3] = {{gen_minus_one(c), gen_minus_one(z)}, {{}, gen_plus_one(c)}};
      // P4 = [a4*b0, a3*b1], P3 rows [a3*b0, a2*b1].
      res.diff[4] = {{gen_plus_one(c), one_minus_gen(z)}, {{}, gen_minus_one(c)}};
      return res;
    }

    // Free product of Z/2 factors and a free group: direct sum of strand
    // resolutions above degree 0.
    int t = static_cast<int>(tors.size());
    res.dims = {1, n, t, t, t};
    res.diff.resize(5);
    res.diff[1].assign(1, std::vector<GroupRingElem>(static_cast<size_t>(n)));
    for (int j = 0; j < n; ++j) res.diff[1][0][static_cast<size_t>(j)] = gog_detail::gen_minus_one(j);
    res.diff[2].assign(static_cast<size_t>(n), std::vector<GroupRingElem>(static_cast<size_t>(t)));
    for (int a = 0; a < t; ++a)
      res.diff[2][static_cast<size_t>(tors[static_cast<size_t>(a)])][static_cast<size_t>(a)] =
          gog_detail::gen_plus_one(tors[static_cast<size_t>(a)]);
    res.diff[3].assign(static_cast<size_t>(t), std::vector<GroupRingElem>(static_cast<size_t>(t)));
    res.diff[4].assign(static_cast<size_t>(t), std::vector<GroupRingElem>(static_cast<size_t>(t)));
    for (int a = 0; a < t; ++a) {
      res.diff[3][static_cast<size_t>(a)][static_cast<size_t>(a)] =
          gog_detail::gen_minus_one(tors[static_cast<size_t>(a)]);
      res.diff[4][static_cast<size_t>(a)][static_cast<size_t>(a)] =
          gog_detail::gen_plus_one(tors[static_cast<size_t>(a)]);
    }
    return res;
  }

  CoefficientModule coefficient(CoeffKind kind) const {
    CoefficientModule m;
    int n = generator_count();
    switch (kind) {
      case CoeffKind::ZTrivial:
        m.free_rank = 1;
        m.action.assign(static_cast<size_t>(n), IntMatrix::identity(1));
        break;
      case CoeffKind::Zu: {
        m.free_rank = 1;
        for (int i = 0; i < n; ++i) {
          IntMatrix a(1, 1);
          a.at(0, 0) = u[static_cast<size_t>(i)];
          m.action.push_back(a);
        }
        break;
      }
      case CoeffKind::F2:
        m.free_rank = 0;
        m.torsion = {2};
        m.action.assign(static_cast<size_t>(n), IntMatrix::identity(1));
        break;
    }
    return m;
  }
};

struct GogEdge {
  int v0, v1;
  Word word0, word1;  // the edge generator's image, in each endpoint's generators
};

struct GraphOfGroups {
  std::vector<GogVertex> vertices;
  std::vector<GogEdge> edges;
};

// Theorem-10-shaped decomposition of pi^orb(B):
//  - no reflector curves: an amalgam mu *_Z nu along the curve separating the
//    cone points from the rest (cones assigned to mu in signature order);
//  - r > 0: the star tree with central vertex pi^orb(B_o) and one Z + Z/2
//    vertex per reflector circle, edge groups Z on the boundary loops.
inline GraphOfGroups decompose(const OrbifoldSignature& sig, const Presentation& pres,
                               const Action& action) {
  if (euler_characteristic(sig).sign() > 0)
    throw std::invalid_argument("decompose: spherical bases are handled by the catalog");
  if (sig.singular_locus_empty())
    throw std::invalid_argument("decompose: no singular locus to split along");

  const Int k = sig.cone_count();
  const Int r = sig.circle_count();
  GraphOfGroups g;

  auto uval = [&](const std::string& label) { return action.value(pres.index_of(label)); };

  auto surface_word_inverse = [&](const GogVertex& v, int first_local) {
    // Inverse of the surface word (commutators or crosscap squares) in local
    // generator indices starting at first_local.
    Word s;
    if (sig.orientable) {
      for (Int i = 0; i < sig.genus; ++i) {
        int a = first_local + 2 * static_cast<int>(i), b = a + 1;
        s.push_back(a + 1);
        s.push_back(b + 1);
        s.push_back(-(a + 1));
        s.push_back(-(b + 1));
      }
    } else {
      for (Int i = 0; i < sig.genus; ++i) {
        int vv = first_local + static_cast<int>(i);
        s.push_back(vv + 1);
        s.push_back(vv + 1);
      }
    }
    (void)v;
    return word_inverse(s);
  };

  if (r == 0) {
    if (k < 2) throw std::invalid_argument("decompose: needs at least two cone points");
    GogVertex mu, nu;
    mu.tag = BlockTag::Z2FreeProduct;
    GogEdge e;
    e.v0 = 0;
    e.v1 = 1;
    bool sphere = sig.orientable && sig.genus == 0;
    Int mu_cones = sphere ? k - 2 : k;
    for (Int i = 1; i <= mu_cones; ++i) {
      mu.labels.push_back("x" + std::to_string(i));
      mu.torsion.push_back(true);
      mu.u.push_back(-1);
      e.word0.push_back(static_cast<int>(i));
    }
    if (sphere) {
      nu.tag = BlockTag::Z2FreeProduct;
      for (Int i = k - 1; i <= k; ++i) {
        nu.labels.push_back("x" + std::to_string(i));
        nu.torsion.push_back(true);
        nu.u.push_back(-1);
      }
      e.word1 = word_inverse({1, 2});
    } else {
      nu.tag = BlockTag::Free;
      if (sig.orientable) {
        for (Int i = 1; i <= sig.genus; ++i) {
          nu.labels.push_back("a" + std::to_string(i));
          nu.torsion.push_back(false);
          nu.u.push_back(uval("a" + std::to_string(i)));
          nu.labels.push_back("b" + std::to_string(i));
          nu.torsion.push_back(false);
          nu.u.push_back(uval("b" + std::to_string(i)));
        }
      } else {
        for (Int i = 1; i <= sig.genus; ++i) {
          nu.labels.push_back("v" + std::to_string(i));
          nu.torsion.push_back(false);
          nu.u.push_back(uval("v" + std::to_string(i)));
        }
      }
      e.word1 = surface_word_inverse(nu, 0);
    }
    g.vertices = {mu, nu};
    g.edges = {e};
  } else {
    GogVertex nu;
    nu.tag = BlockTag::SurfaceWithBoundary;
    for (Int i = 1; i <= k; ++i) {
      nu.labels.push_back("x" + std::to_string(i));
      nu.torsion.push_back(true);
      nu.u.push_back(-1);
    }
    for (Int j = 1; j <= r - 1; ++j) {
      nu.labels.push_back("z" + std::to_string(j));
      nu.torsion.push_back(false);
      nu.u.push_back(uval("z" + std::to_string(j)));
    }
    int surface_first = static_cast<int>(k + r - 1);
    if (sig.orientable) {
      for (Int i = 1; i <= sig.genus; ++i) {
        nu.labels.push_back("a" + std::to_string(i));
        nu.torsion.push_back(false);
        nu.u.push_back(uval("a" + std::to_string(i)));
        nu.labels.push_back("b" + std::to_string(i));
        nu.torsion.push_back(false);
        nu.u.push_back(uval("b" + std::to_string(i)));
      }
    } else {
      for (Int i = 1; i <= sig.genus; ++i) {
        nu.labels.push_back("v" + std::to_string(i));
        nu.torsion.push_back(false);
        nu.u.push_back(uval("v" + std::to_string(i)));
      }
    }
    g.vertices.push_back(nu);

    for (Int j = 1; j <= r; ++j) {
      GogVertex gamma;
      gamma.tag = BlockTag::ZxZ2;
      gamma.labels = {"z" + std::to_string(j), "c" + std::to_string(j)};
      gamma.torsion = {false, true};
      gamma.u = {uval("z" + std::to_string(j)), -1};
      g.vertices.push_back(gamma);

      GogEdge e;
      e.v0 = 0;
      e.v1 = static_cast<int>(j);
      e.word1 = {1};  // the loop generator of gamma_j
      if (j < r) {
        e.word0 = {static_cast<int>(k + j)};  // z_j inside nu
      } else {
        // z_r = (x_1..x_k z_1..z_{r-1})^{-1} (surface word)^{-1}.
        Word head;
        for (Int i = 1; i <= k; ++i) head.push_back(static_cast<int>(i));
        for (Int jj = 1; jj <= r - 1; ++jj) head.push_back(static_cast<int>(k + jj));
        e.word0 = word_concat(word_inverse(head), surface_word_inverse(nu, surface_first));
      }
      g.edges.push_back(e);
    }
  }

  // The two edge words must carry the same action value.
  for (const auto& e : g.edges) {
    auto val = [&](const GogVertex& v, const Word& w) {
      int s = 1;
      for (int letter : w) s *= v.u[static_cast<size_t>(std::abs(letter) - 1)];
      return s;
    };
    if (val(g.vertices[static_cast<size_t>(e.v0)], e.word0) !=
        val(g.vertices[static_cast<size_t>(e.v1)], e.word1))
      throw InternalError("graph-of-groups edge words disagree on the action");
  }
  return g;
}

// Total complex of the graph of groups: vertex cochains at degree n, edge
// cochains at degree n-1, differential (delta_v x, res_{v0} x - res_{v1} x -
// delta_e y).
inline CochainComplex mv_complex(const GraphOfGroups& g, CoeffKind kind) {
  std::vector<Resolution> res;
  std::vector<CoefficientModule> coeff;
  for (const auto& v : g.vertices) {
    res.push_back(v.resolution());
    coeff.push_back(v.coefficient(kind));
  }
  int d = coeff.empty() ? 1 : coeff[0].dim();

  const int top = 4;
  // Coordinate offsets per degree: vertices then edges.
  std::vector<std::vector<int>> voff(static_cast<size_t>(top + 1)), eoff(static_cast<size_t>(top + 1));
  std::vector<int> total(static_cast<size_t>(top + 1), 0);
  for (int n = 0; n <= top; ++n) {
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      voff[static_cast<size_t>(n)].push_back(total[static_cast<size_t>(n)]);
      total[static_cast<size_t>(n)] += res[v].dims[static_cast<size_t>(n)] * d;
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
      eoff[static_cast<size_t>(n)].push_back(total[static_cast<size_t>(n)]);
      int edge_dim = (n >= 1 && n - 1 <= 1) ? 1 : 0;  // Z resolution: dims {1,1}
      total[static_cast<size_t>(n)] += edge_dim * d;
    }
  }

  CochainComplex c;
  c.dims.assign(total.begin(), total.end());
  for (int n = 0; n <= top; ++n) {
    int copies = total[static_cast<size_t>(n)] / d;
    CoefficientModule proto = coeff.empty() ? CoefficientModule{} : coeff[0];
    c.torsion.push_back(detail::block_torsion(proto, copies));
  }

  auto put_block = [&](IntMatrix& m, int row0, int col0, const IntMatrix& b, Int scale) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.at(row0 + i, col0 + j) += scale * b.at(i, j);
  };

  for (int n = 0; n < top; ++n) {
    IntMatrix delta(total[static_cast<size_t>(n + 1)], total[static_cast<size_t>(n)]);
    // Vertex-internal Hom differentials.
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      const auto& dn = res[v].diff[static_cast<size_t>(n + 1)];
      int rows = res[v].dims[static_cast<size_t>(n + 1)];
      int cols = res[v].dims[static_cast<size_t>(n)];
      for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
          if (static_cast<size_t>(i) >= dn.size() || static_cast<size_t>(j) >= dn[static_cast<size_t>(i)].size()) continue;
          const GroupRingElem& entry = dn[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (entry.empty()) continue;
          put_block(delta, voff[static_cast<size_t>(n + 1)][v] + j * d,
                    voff[static_cast<size_t>(n)][v] + i * d,
                    gog_detail::evaluate(coeff[v], entry), 1);
        }
    }
    // Edge rows at level n+1 (= Hom(P_{e,n})): restriction chain maps from the
    // endpoint vertices, and the edge's own differential.
    for (size_t e = 0; e < g.edges.size(); ++e) {
      int level = n;  // edge resolution degree feeding D^{n+1}
      if (level > 1) continue;
      int row0 = eoff[static_cast<size_t>(n + 1)][e];
      const GogEdge& edge = g.edges[e];
      const int endpoints[2] = {edge.v0, edge.v1};
      const Word* words[2] = {&edge.word0, &edge.word1};
      for (int side = 0; side < 2; ++side) {
        int v = endpoints[side];
        Int sign = side == 0 ? 1 : -1;
        if (level == 0) {
          put_block(delta, row0, voff[static_cast<size_t>(n)][static_cast<size_t>(v)],
                    IntMatrix::identity(d), sign);
        } else {
          auto fox = fox_derivatives(coeff[static_cast<size_t>(v)], *words[side],
                                     g.vertices[static_cast<size_t>(v)].generator_count());
          for (int i = 0; i < g.vertices[static_cast<size_t>(v)].generator_count(); ++i)
            put_block(delta, row0, voff[static_cast<size_t>(n)][static_cast<size_t>(v)] + i * d,
                      fox[static_cast<size_t>(i)], sign);
        }
      }
      if (level == 1) {
        // -delta_e from the edge block at degree n (level 0 cochains).
        IntMatrix rho = action_of_word(coeff[static_cast<size_t>(edge.v0)], edge.word0);
        put_block(delta, row0, eoff[static_cast<size_t>(n)][e], rho - IntMatrix::identity(d), -1);
      }
    }
    c.delta.push_back(delta);
  }

  // The assembled differentials must square to zero; anything else is an
  // assembly bug, not a tolerable approximation.
  for (int n = 0; n + 1 < top; ++n) {
    IntMatrix sq = c.delta[static_cast<size_t>(n + 1)] * c.delta[static_cast<size_t>(n)];
    if (kind == CoeffKind::F2) {
      for (int i = 0; i < sq.rows(); ++i)
        for (int j = 0; j < sq.cols(); ++j)
          if (sq.at(i, j) % 2 != 0) throw InternalError("MV differential fails d^2 = 0 (mod 2)");
    } else if (!sq.is_zero()) {
      throw InternalError("MV differential fails d^2 = 0");
    }
  }
  return c;
}

inline AbelianGroup mv_cohomology(const GraphOfGroups& g, CoeffKind kind, int degree) {
  if (degree < 0 || degree > 3)
    throw std::invalid_argument("mv_cohomology: degree 0..3 only");
  return mv_complex(g, kind).cohomology(degree);
}

// ---------------------------------------------------------------------------
// Closed forms.  H^3(pi;Z^u) = (Z/2)^{k+r} with basis labelled by the cone
// points and reflector curves, and the k-invariant is beta_u(U^2), for every
// torsion-free-kernel action.  H^2(pi;Z^u) = (Z/2)^r whenever k > 0.  For
// k = 0 the published Z + (Z/2)^{r-1} only covers part of the action space;
// eliminating the Mayer-Vietoris total complex by hand gives the general
// value  H^2 = Z^r / 2M,  where M is spanned by the coordinate vectors of
// the u-twisted circles together with the Fox-derivative rows of the r
// boundary words against the infinite-order generators.  (The silvered
// annulus with both curves twisted has H^2 = (Z/2)^2, and the silvered
// Moebius band with u = +1 on the crosscap has H^2 = Z/4; both confirmed by
// independent spectral-sequence computations.)

struct Theorem10Result {
  AbelianGroup h2_zu;
  AbelianGroup h3_zu;
  std::vector<std::string> h3_basis;
  std::string k_invariant;  // "beta_u(U^2)" or "0"
  // k = 0 and the value differs from the published Z + (Z/2)^{r-1}.
  bool published_form_deviation = false;
};

inline Theorem10Result theorem10_closed_form(const OrbifoldSignature& sig,
                                             const Presentation& pres, const Action& action) {
  if (euler_characteristic(sig).sign() > 0)
    throw std::invalid_argument("closed form requires an aspherical base");
  if (sig.singular_locus_empty())
    throw std::invalid_argument("closed form requires a nonempty singular locus");
  const Int k = sig.cone_count();
  const Int r = sig.circle_count();
  Theorem10Result out;
  out.h3_zu = AbelianGroup::elementary_two(k + r);
  for (Int i = 1; i <= k; ++i) out.h3_basis.push_back("cone " + std::to_string(i));
  for (Int j = 1; j <= r; ++j) out.h3_basis.push_back("circle " + std::to_string(j));
  out.k_invariant = "beta_u(U^2)";

  if (k > 0) {
    out.h2_zu = AbelianGroup::elementary_two(r);
    return out;
  }

  // k = 0, r >= 1: H^2 = Z^r / 2M.
  CoefficientModule zu(CoefficientModule::twisted_z(
      pres, [&] {
        std::vector<int> vals;
        for (int i = 0; i < pres.generator_count(); ++i) vals.push_back(action.value(i));
        return vals;
      }()));
  // Boundary words: w_j = z_j for j < r, and w_r = (z_1..z_{r-1})^{-1} S^{-1}
  // from the global relator (cone part empty here).
  std::vector<Word> boundary(static_cast<size_t>(r));
  Word head, surface;
  for (Int j = 1; j <= r - 1; ++j)
    boundary[static_cast<size_t>(j - 1)] = {pres.index_of("z" + std::to_string(j)) + 1};
  for (Int j = 1; j <= r - 1; ++j) head.push_back(pres.index_of("z" + std::to_string(j)) + 1);
  if (sig.orientable) {
    for (Int i = 1; i <= sig.genus; ++i) {
      int a = pres.index_of("a" + std::to_string(i)) + 1;
      int b = pres.index_of("b" + std::to_string(i)) + 1;
      surface.insert(surface.end(), {a, b, -a, -b});
    }
  } else {
    for (Int i = 1; i <= sig.genus; ++i) {
      int v = pres.index_of("v" + std::to_string(i)) + 1;
      surface.insert(surface.end(), {v, v});
    }
  }
  boundary[static_cast<size_t>(r - 1)] =
      word_concat(word_inverse(head), word_inverse(surface));

  std::vector<std::vector<BigInt>> m_columns;
  auto twists = classify_reflector_curves(pres, action);
  for (Int j = 0; j < r; ++j)
    if (twists[static_cast<size_t>(j)] == CurveTwist::Twisted) {
      std::vector<BigInt> col(static_cast<size_t>(r), 0);
      col[static_cast<size_t>(j)] = 1;
      m_columns.push_back(col);
    }
  for (int g = 0; g < pres.generator_count(); ++g) {
    GeneratorRole role = pres.generators[static_cast<size_t>(g)].role;
    if (role == GeneratorRole::Reflection) continue;
    if (pres.generators[static_cast<size_t>(g)].label == "z" + std::to_string(r)) continue;
    std::vector<BigInt> col(static_cast<size_t>(r), 0);
    bool nonzero = false;
    for (Int j = 0; j < r; ++j) {
      auto fox = fox_derivatives(zu, boundary[static_cast<size_t>(j)], pres.generator_count());
      BigInt v = fox[static_cast<size_t>(g)].at(0, 0);
      col[static_cast<size_t>(j)] = v;
      nonzero = nonzero || v != 0;
    }
    if (nonzero) m_columns.push_back(col);
  }
  IntMatrix relations(static_cast<int>(r), static_cast<int>(m_columns.size()));
  for (size_t c = 0; c < m_columns.size(); ++c)
    for (Int j = 0; j < r; ++j)
      relations.at(static_cast<int>(j), static_cast<int>(c)) =
          2 * m_columns[c][static_cast<size_t>(j)];
  out.h2_zu = AbelianGroup::from_quotient(static_cast<int>(r), relations);

  AbelianGroup published(1, std::vector<Int>(static_cast<size_t>(r - 1), 2));
  out.published_form_deviation = !(out.h2_zu == published);
  return out;
}

// ---------------------------------------------------------------------------
// Lemma 9: for alpha = free product of k copies of Z/2 with u = -1 on each
// factor, restriction maps H^1(alpha;Z^u) onto H^1(Ker u; Z) = Z^{k-1}; for
// even k it also maps onto H^1(<z>;Z) for z the product of the involutions.

struct Lemma9Certificate {
  Int k = 0;
  bool surjective = false;
  bool z_surjective = false;  // meaningful when k is even
  AbelianGroup h1_alpha;
};

inline Lemma9Certificate lemma9_restriction(Int k) {
  if (k < 2) throw std::invalid_argument("lemma9_restriction: k >= 2 required");
  Presentation alpha;
  for (Int i = 1; i <= k; ++i) {
    int g = alpha.add_generator("x" + std::to_string(i), GeneratorRole::Cone);
    alpha.relators.push_back({g + 1, g + 1});
  }
  CoefficientModule zu =
      CoefficientModule::twisted_z(alpha, std::vector<int>(static_cast<size_t>(k), -1));
  H1Classes h1c = h1_with_cocycles(alpha, zu);

  Lemma9Certificate cert;
  cert.k = k;
  cert.h1_alpha = h1c.group;

  // Values of each cocycle on the free basis y_i = x_1 x_i of the kernel.
  int ncls = h1c.cocycles.cols();
  IntMatrix rest(static_cast<int>(k - 1), ncls);
  for (Int i = 2; i <= k; ++i) {
    Word y = {1, static_cast<int>(i)};
    auto fox = fox_derivatives(zu, y, alpha.generator_count());
    for (int c = 0; c < ncls; ++c) {
      BigInt v = 0;
      for (int gidx = 0; gidx < alpha.generator_count(); ++gidx)
        v += fox[static_cast<size_t>(gidx)].at(0, 0) * h1c.cocycles.at(gidx, c);
      rest.at(static_cast<int>(i - 2), c) = v;
    }
  }
  cert.surjective = AbelianGroup::from_quotient(static_cast<int>(k - 1), rest).is_trivial();

  if (k % 2 == 0) {
    Word z;
    for (Int i = 1; i <= k; ++i) z.push_back(static_cast<int>(i));
    auto fox = fox_derivatives(zu, z, alpha.generator_count());
    IntMatrix zr(1, ncls);
    for (int c = 0; c < ncls; ++c) {
      BigInt v = 0;
      for (int gidx = 0; gidx < alpha.generator_count(); ++gidx)
        v += fox[static_cast<size_t>(gidx)].at(0, 0) * h1c.cocycles.at(gidx, c);
      zr.at(0, c) = v;
    }
    cert.z_surjective = AbelianGroup::from_quotient(1, zr).is_trivial();
  }
  return cert;
}

}  // namespace orb

#endif  // ORB_GRAPH_OF_GROUPS_HPP_
