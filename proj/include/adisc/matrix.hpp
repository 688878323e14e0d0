#pragma once

#include <cstddef>
#include <vector>

#include "adisc/error.hpp"
#include "adisc/rational.hpp"

namespace adisc {

using QVec = std::vector<Rat>;

// Dense rational matrix. All elimination routines pivot on the first nonzero
// entry in row-major order, so results are reproducible across runs.
class QMat {
 public:
  QMat() = default;
  QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMat identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  QVec row(size_t i) const {
    QVec r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  QVec col(size_t j) const {
    QVec c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  QMat transpose() const {
    QMat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend QMat operator*(const QMat& a, const QMat& b) {
    QMat r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j)
          r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  QVec apply(const QVec& x) const {
    QVec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
    return r;
  }

  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

struct Rref {
  QMat m;
  std::vector<size_t> pivot_cols;  // one per pivot row, increasing
  size_t rank() const { return pivot_cols.size(); }
};

inline Rref rref(QMat m) {
  Rref out;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rat f = m.at(i, c);
      for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

inline size_t rank(const QMat& m) { return rref(m).rank(); }

// Kernel basis as columns. Each free column f yields the vector with -1 at
// f and +RREF[r][f] at pivot positions, in increasing free-column order.
inline QMat kernel_basis(const QMat& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat k(m.cols(), free_cols.size());
  for (size_t j = 0; j < free_cols.size(); ++j) {
    size_t f = free_cols[j];
    k.at(f, j) = Rat(-1);
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
      k.at(rr.pivot_cols[r], j) = rr.m.at(r, f);
  }
  return k;
}

inline Rat det(QMat m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidInput, "det of non-square matrix");
  Rat d(1);
  size_t n = m.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m.at(p, c).is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = Rat(1) / m.at(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Rat f = m.at(i, c) * inv;
      for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

inline QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidInput, "inverse of non-square matrix");
  size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  Rref rr = rref(std::move(aug));
  if (rr.rank() < n || rr.pivot_cols[n - 1] != n - 1)
    throw Error(Errc::InvalidInput, "singular matrix");
  QMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.m.at(i, n + j);
  return inv;
}

// Unique solution of a full-column-rank system A x = b (least-squares exact
// via normal equations is avoided; requires consistency).
inline QVec solve_consistent(const QMat& a, const QVec& b) {
  QMat aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Rref rr = rref(std::move(aug));
  for (size_t c : rr.pivot_cols)
    if (c == a.cols()) throw Error(Errc::InvalidInput, "inconsistent linear system");
  QVec x(a.cols());
  for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
    x[rr.pivot_cols[r]] = rr.m.at(r, a.cols());
  return x;
}

inline QVec vec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec vec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat r;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

inline QVec vec_scale(const QVec& a, const Rat& s) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

inline bool vec_is_zero(const QVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace adisc
