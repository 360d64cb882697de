#ifndef ORB_F2_HPP_
#define ORB_F2_HPP_

// Dense linear algebra over the two-element field.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace orb {

using F2Vec = std::vector<std::uint8_t>;

inline std::uint8_t f2_dot(const F2Vec& a, const F2Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("f2_dot length mismatch");
  std::uint8_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s ^= static_cast<std::uint8_t>(a[i] & b[i]);
  return s;
}

inline void f2_add_into(F2Vec& dst, const F2Vec& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

class F2Matrix {
 public:
  F2Matrix() : cols_(0) {}
  F2Matrix(int rows, int cols) : cols_(cols), rows_(rows, F2Vec(cols, 0)) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  std::uint8_t& at(int r, int c) { return rows_[r][c]; }
  std::uint8_t at(int r, int c) const { return rows_[r][c]; }
  const F2Vec& row(int r) const { return rows_[r]; }
  F2Vec& row(int r) { return rows_[r]; }

  F2Vec apply(const F2Vec& x) const {
    F2Vec y(rows(), 0);
    for (int i = 0; i < rows(); ++i) y[i] = f2_dot(rows_[i], x);
    return y;
  }

  int rank() const {
    F2Matrix m = *this;
    return m.rref();
  }

  // Row-reduce in place; returns rank. Pivot columns chosen left to right.
  int rref() {
    int r = 0;
    for (int c = 0; c < cols_ && r < rows(); ++c) {
      int pivot = -1;
      for (int i = r; i < rows(); ++i)
        if (rows_[i][c]) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows_[r], rows_[pivot]);
      for (int i = 0; i < rows(); ++i)
        if (i != r && rows_[i][c]) f2_add_into(rows_[i], rows_[r]);
      ++r;
    }
    return r;
  }

  // Deterministic echelon basis of {x : M x = 0}, one vector per free column.
  std::vector<F2Vec> kernel() const {
    F2Matrix m = *this;
    m.rref();
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(cols_, false);
    for (int i = 0; i < m.rows(); ++i) {
      int c = 0;
      while (c < cols_ && !m.rows_[i][c]) ++c;
      if (c == cols_) break;
      pivot_col_of_row.push_back(c);
      is_pivot[c] = true;
    }
    std::vector<F2Vec> basis;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      F2Vec v(cols_, 0);
      v[c] = 1;
      for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
        if (m.rows_[i][c]) v[pivot_col_of_row[i]] = 1;
      basis.push_back(v);
    }
    return basis;
  }

 private:
  int cols_;
  std::vector<F2Vec> rows_;
};

// Coordinates of v in the span of basis vectors; throws if outside the span.
inline F2Vec f2_coordinates(const std::vector<F2Vec>& basis, const F2Vec& v) {
  if (basis.empty()) {
    for (auto b : v)
      if (b) throw std::invalid_argument("vector outside subspace span");
    return {};
  }
  size_t n = v.size();
  // Augmented system [basis columns | v], eliminate.
  F2Matrix aug(static_cast<int>(n), static_cast<int>(basis.size()) + 1);
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) aug.at(static_cast<int>(i), static_cast<int>(j)) = basis[j][i];
  for (size_t i = 0; i < n; ++i) aug.at(static_cast<int>(i), static_cast<int>(basis.size())) = v[i];
  aug.rref();
  F2Vec coords(basis.size(), 0);
  for (int i = 0; i < aug.rows(); ++i) {
    int lead = -1;
    for (int c = 0; c < aug.cols(); ++c)
      if (aug.at(i, c)) {
        lead = c;
        break;
      }
    if (lead < 0) break;
    if (lead == static_cast<int>(basis.size()))
      throw std::invalid_argument("vector outside subspace span");
    coords[lead] = aug.at(i, static_cast<int>(basis.size()));
  }
  return coords;
}

}  // namespace orb

#endif  // ORB_F2_HPP_
