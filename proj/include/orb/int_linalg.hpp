#ifndef ORB_INT_LINALG_HPP_
#define ORB_INT_LINALG_HPP_

// Exact integer linear algebra: dense matrices over Z with GMP entries,
// Smith normal form with unimodular transforms, lattice kernels, bases and
// quotients. Intermediate Smith-form entries can swell far past any fixed
// word size, so the matrices carry arbitrary precision; the small scalars
// the rest of the library consumes are narrowed with a range check.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orb {

using Int = std::int64_t;
using BigInt = mpz_class;

inline Int to_small(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value exceeds 64-bit range");
  return static_cast<Int>(v.get_si());
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int gcd_nonneg(Int a, Int b) {
  if (a < 0) a = checked_neg(a);
  if (b < 0) b = checked_neg(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, BigInt(0)) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const BigInt& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  IntMatrix operator-() const {
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }

  IntMatrix operator-(const IntMatrix& o) const { return *this + (-o); }

  // Horizontal concatenation [*this | o].
  IntMatrix hcat(const IntMatrix& o) const {
    if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0)
      throw std::invalid_argument("hcat shape mismatch");
    int rr = rows_ == 0 ? o.rows_ : rows_;
    IntMatrix r(rr, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    return r;
  }

  IntMatrix submatrix_cols(int first, int count) const {
    IntMatrix r(rows_, count);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < count; ++j) r.at(i, j) = at(i, first + j);
    return r;
  }

  IntMatrix submatrix_rows(int first, int count) const {
    IntMatrix r(count, cols_);
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(first + i, j);
    return r;
  }

  bool is_zero() const {
    for (const BigInt& v : data_)
      if (v != 0) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<BigInt> data_;
};

// U * input * V = d, with U, V unimodular (inverses tracked exactly).
struct SmithForm {
  IntMatrix d;
  IntMatrix u, u_inv;
  IntMatrix v, v_inv;

  int rank() const {
    int n = std::min(d.rows(), d.cols());
    int r = 0;
    while (r < n && d.at(r, r) != 0) ++r;
    return r;
  }

  std::vector<Int> invariant_factors() const {
    std::vector<Int> f;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n && d.at(i, i) != 0; ++i) f.push_back(to_small(d.at(i, i)));
    return f;
  }
};

namespace detail {

inline void row_add(IntMatrix& m, int dst, int src, const BigInt& c) {
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}

inline void col_add(IntMatrix& m, int dst, int src, const BigInt& c) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += c * m.at(i, src);
}

inline void row_swap(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void col_swap(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

inline void row_negate(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

inline void col_negate(IntMatrix& m, int c) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& input) {
  SmithForm s;
  s.d = input;
  s.u = IntMatrix::identity(input.rows());
  s.u_inv = IntMatrix::identity(input.rows());
  s.v = IntMatrix::identity(input.cols());
  s.v_inv = IntMatrix::identity(input.cols());
  IntMatrix& d = s.d;

  auto apply_row_add = [&](int dst, int src, const BigInt& c) {
    detail::row_add(d, dst, src, c);
    detail::row_add(s.u, dst, src, c);
    detail::col_add(s.u_inv, src, dst, -c);
  };
  auto apply_col_add = [&](int dst, int src, const BigInt& c) {
    detail::col_add(d, dst, src, c);
    detail::col_add(s.v, dst, src, c);
    detail::row_add(s.v_inv, src, dst, -c);
  };
  auto apply_row_swap = [&](int a, int b) {
    detail::row_swap(d, a, b);
    detail::row_swap(s.u, a, b);
    detail::col_swap(s.u_inv, a, b);
  };
  auto apply_col_swap = [&](int a, int b) {
    detail::col_swap(d, a, b);
    detail::col_swap(s.v, a, b);
    detail::row_swap(s.v_inv, a, b);
  };
  auto apply_row_negate = [&](int r) {
    detail::row_negate(d, r);
    detail::row_negate(s.u, r);
    detail::col_negate(s.u_inv, r);
  };

  int n = std::min(d.rows(), d.cols());
  for (int t = 0; t < n; ++t) {
    bool block_done = false;
    while (true) {
      // Smallest nonzero |entry| of the trailing block as pivot; remainders
      // are strictly smaller, so the Euclidean passes terminate.
      int pr = -1, pc = -1;
      for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
          if (d.at(i, j) == 0) continue;
          if (pr < 0 || cmp(abs(d.at(i, j)), abs(d.at(pr, pc))) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) {
        block_done = true;
        break;
      }
      if (pr != t) apply_row_swap(pr, t);
      if (pc != t) apply_col_swap(pc, t);

      bool dirty = false;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        apply_row_add(i, t, -BigInt(d.at(i, t) / d.at(t, t)));
        dirty = dirty || d.at(i, t) != 0;
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        apply_col_add(j, t, -BigInt(d.at(t, j) / d.at(t, t)));
        dirty = dirty || d.at(t, j) != 0;
      }
      if (dirty) continue;

      // Divisibility sweep: the pivot must divide every remaining entry.
      bool chained = true;
      for (int i = t + 1; i < d.rows() && chained; ++i)
        for (int j = t + 1; j < d.cols() && chained; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            apply_row_add(t, i, 1);
            chained = false;
          }
      if (chained) break;
    }
    if (block_done) break;
    if (d.at(t, t) < 0) apply_row_negate(t);
  }
  return s;
}

// Columns form a basis of {x : m x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  SmithForm s = smith_normal_form(m);
  int r = s.rank();
  return s.v.submatrix_cols(r, m.cols() - r);
}

// Columns form a basis of the lattice spanned by the columns of m.
inline IntMatrix lattice_basis(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  int r = s.rank();
  IntMatrix b(m.rows(), r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < m.rows(); ++i) b.at(i, j) = s.u_inv.at(i, j) * s.d.at(j, j);
  return b;
}

// Basis of {x : m x lies in the column span of l}.
inline IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& l) {
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  IntMatrix stacked = m.hcat(-l);
  IntMatrix k = kernel_basis(stacked);
  IntMatrix proj = k.submatrix_rows(0, m.cols());
  return lattice_basis(proj);
}

// Solve b x = t for integer x; b must have full column rank (a lattice basis).
inline std::optional<IntMatrix> solve_columns(const IntMatrix& b, const IntMatrix& t) {
  SmithForm s = smith_normal_form(b);
  int r = s.rank();
  if (r != b.cols()) throw std::invalid_argument("solve_columns: basis not full rank");
  IntMatrix ut = s.u * t;
  for (int i = r; i < ut.rows(); ++i)
    for (int j = 0; j < ut.cols(); ++j)
      if (ut.at(i, j) != 0) return std::nullopt;
  IntMatrix y(b.cols(), t.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ut.cols(); ++j) {
      if (ut.at(i, j) % s.d.at(i, i) != 0) return std::nullopt;
      y.at(i, j) = ut.at(i, j) / s.d.at(i, i);
    }
  return s.v * y;
}

// Adjugate-free inverse via the Smith transforms; requires |det| = 1.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  SmithForm s = smith_normal_form(m);
  for (int i = 0; i < m.rows(); ++i)
    if (s.d.at(i, i) != 1) throw std::invalid_argument("matrix is not invertible over Z");
  // m = u_inv d v_inv with d = I, so m^{-1} = v u.
  return s.v * s.u;
}

}  // namespace orb

#endif  // ORB_INT_LINALG_HPP_
