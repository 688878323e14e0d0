#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adisc/error.hpp"
#include "adisc/matrix.hpp"

namespace adisc {

// A signed support (A, eps): ordered exponent vectors with a sign each.
// Immutable after construction; all predicates downstream are exact.
struct SignedSupport {
  std::vector<QVec> points;
  std::vector<int> signs;  // entries in {+1, -1}
  size_t n = 0;            // ambient dimension

  size_t count() const { return points.size(); }

  std::vector<size_t> positive_indices() const {
    std::vector<size_t> r;
    for (size_t i = 0; i < signs.size(); ++i)
      if (signs[i] > 0) r.push_back(i);
    return r;
  }
  std::vector<size_t> negative_indices() const {
    std::vector<size_t> r;
    for (size_t i = 0; i < signs.size(); ++i)
      if (signs[i] < 0) r.push_back(i);
    return r;
  }

  SignedSupport flipped() const {
    SignedSupport s = *this;
    for (int& e : s.signs) e = -e;
    return s;
  }
};

inline SignedSupport make_support(std::vector<QVec> points, std::vector<int> signs) {
  if (points.empty()) throw Error(Errc::InvalidInput, "empty support");
  if (points.size() != signs.size())
    throw Error(Errc::InvalidInput, "signs length differs from points length");
  size_t n = points[0].size();
  if (n == 0) throw Error(Errc::InvalidInput, "zero-dimensional points");
  for (const QVec& p : points)
    if (p.size() != n) throw Error(Errc::InvalidInput, "inconsistent point dimensions");
  for (int s : signs)
    if (s != 1 && s != -1) throw Error(Errc::InvalidInput, "signs must be +1 or -1");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw Error(Errc::InvalidInput, "support points must be pairwise distinct");
  SignedSupport s;
  s.points = std::move(points);
  s.signs = std::move(signs);
  s.n = n;
  return s;
}

// Ahat: all-ones row stacked over the exponents, (n+1) x (n+k+1).
struct AhatMatrix {
  QMat m;
  size_t rank = 0;
  size_t codim = 0;  // #A - rank
  bool full_dimensional() const { return rank == m.rows(); }
};

inline AhatMatrix build_ahat(const SignedSupport& s) {
  AhatMatrix out;
  out.m = QMat(s.n + 1, s.count());
  for (size_t j = 0; j < s.count(); ++j) {
    out.m.at(0, j) = Rat(1);
    for (size_t i = 0; i < s.n; ++i) out.m.at(i + 1, j) = s.points[j][i];
  }
  out.rank = rank(out.m);
  out.codim = s.count() - out.rank;
  return out;
}

inline QMat ahat_signed(const AhatMatrix& ahat, const std::vector<int>& signs) {
  QMat m = ahat.m;
  for (size_t j = 0; j < m.cols(); ++j)
    if (signs[j] < 0)
      for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
  return m;
}

// Gale dual of Ahat: columns span ker(Ahat), last row normalized to
// (0, ..., 0, -1). Output is a deterministic function of the input.
struct GaleDual {
  QMat b;  // (n+k+1) x k

  size_t k() const { return b.cols(); }
  size_t m() const { return b.rows(); }

  // B * (mu, 1)^T for k == 2
  QVec apply_muhat(const Rat& mu) const {
    QVec r(b.rows());
    for (size_t i = 0; i < b.rows(); ++i) r[i] = b.at(i, 0) * mu + b.at(i, 1);
    return r;
  }
};

inline GaleDual gale_dual(const AhatMatrix& ahat) {
  if (!ahat.full_dimensional())
    throw Error(Errc::NotFullDimensional,
                "support is not full-dimensional (rank " + std::to_string(ahat.rank) + ")");
  if (ahat.codim == 0)
    throw Error(Errc::NotFullCodimension, "kernel is trivial (k = 0), no Gale dual");
  QMat b = kernel_basis(ahat.m);
  size_t last = b.rows() - 1, k = b.cols();
  size_t j = k;
  for (size_t c = 0; c < k; ++c)
    if (!b.at(last, c).is_zero()) {
      j = c;
      break;
    }
  if (j == k)
    throw Error(Errc::NormalizationImpossible,
                "last row of every kernel basis is zero; the last point is affinely forced");
  if (j != k - 1)
    for (size_t i = 0; i < b.rows(); ++i) std::swap(b.at(i, j), b.at(i, k - 1));
  Rat scale = Rat(-1) / b.at(last, k - 1);
  for (size_t i = 0; i < b.rows(); ++i) b.at(i, k - 1) *= scale;
  for (size_t c = 0; c + 1 < k; ++c) {
    Rat f = b.at(last, c);
    if (f.is_zero()) continue;
    for (size_t i = 0; i < b.rows(); ++i) b.at(i, c) += f * b.at(i, k - 1);
  }
  return GaleDual{std::move(b)};
}

inline GaleDual gale_dual(const SignedSupport& s) { return gale_dual(build_ahat(s)); }

// y = M x + v
struct AffineMap {
  QMat m;
  QVec v;

  QVec apply(const QVec& x) const {
    QVec r = m.apply(x);
    for (size_t i = 0; i < r.size(); ++i) r[i] += v[i];
    return r;
  }
  bool is_identity() const {
    if (!vec_is_zero(v)) return false;
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != (i == j ? Rat(1) : Rat(0))) return false;
    return true;
  }
};

// Map the support onto one containing {0, e_1, ..., e_n}, det(M) > 0.
inline std::pair<SignedSupport, AffineMap> normalize_affine(const SignedSupport& s) {
  AhatMatrix ahat = build_ahat(s);
  if (!ahat.full_dimensional())
    throw Error(Errc::NotFullDimensional, "cannot normalize a degenerate support");
  // greedy affinely independent basis: base point + n independent differences
  size_t base = 0;
  std::vector<size_t> idx;
  QMat dirs(s.n, 0);
  std::vector<QVec> chosen;
  for (size_t i = 1; i < s.count() && chosen.size() < s.n; ++i) {
    QVec d = vec_sub(s.points[i], s.points[base]);
    QMat test(s.n, chosen.size() + 1);
    for (size_t c = 0; c < chosen.size(); ++c)
      for (size_t r = 0; r < s.n; ++r) test.at(r, c) = chosen[c][r];
    for (size_t r = 0; r < s.n; ++r) test.at(r, chosen.size()) = d[r];
    if (rank(test) == chosen.size() + 1) {
      chosen.push_back(d);
      idx.push_back(i);
    }
  }
  if (chosen.size() < s.n)
    throw Error(Errc::NotFullDimensional, "cannot normalize a degenerate support");
  QMat dmat(s.n, s.n);
  for (size_t c = 0; c < s.n; ++c)
    for (size_t r = 0; r < s.n; ++r) dmat.at(r, c) = chosen[c][r];
  if (det(dmat).sign() < 0) {
    if (s.n >= 2) {
      // swap the last two basis directions so det(M) > 0
      for (size_t r = 0; r < s.n; ++r) std::swap(dmat.at(r, s.n - 1), dmat.at(r, s.n - 2));
      std::swap(idx[s.n - 1], idx[s.n - 2]);
    } else {
      // n = 1: walk the segment from the other end instead
      base = idx[0];
      dmat.at(0, 0) = -dmat.at(0, 0);
    }
  }
  AffineMap map;
  map.m = inverse(dmat);
  map.v = vec_scale(map.m.apply(s.points[base]), Rat(-1));
  SignedSupport out = s;
  for (QVec& p : out.points) p = map.apply(p);
  return {std::move(out), std::move(map)};
}

// (A_F, eps_F) in an affine chart of the face spanned by `face` indices.
// The indices must be exactly the support points lying in their affine hull.
inline SignedSupport restrict_to_face(const SignedSupport& s, std::vector<size_t> face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  if (face.empty() || face.back() >= s.count())
    throw Error(Errc::InvalidFace, "face indices out of range");
  // affine hull basis of the face points
  const QVec& p0 = s.points[face[0]];
  std::vector<QVec> dirs;
  for (size_t fi : face) {
    QVec d = vec_sub(s.points[fi], p0);
    QMat test(s.n, dirs.size() + 1);
    for (size_t c = 0; c < dirs.size(); ++c)
      for (size_t r = 0; r < s.n; ++r) test.at(r, c) = dirs[c][r];
    for (size_t r = 0; r < s.n; ++r) test.at(r, dirs.size()) = d[r];
    if (rank(test) == dirs.size() + 1) dirs.push_back(d);
  }
  size_t dim = dirs.size();
  QMat dmat(s.n, dim);
  for (size_t c = 0; c < dim; ++c)
    for (size_t r = 0; r < s.n; ++r) dmat.at(r, c) = dirs[c][r];
  // every support point in the affine hull must belong to the face
  for (size_t i = 0; i < s.count(); ++i) {
    QVec d = vec_sub(s.points[i], p0);
    QMat test(s.n, dim + 1);
    for (size_t c = 0; c < dim; ++c)
      for (size_t r = 0; r < s.n; ++r) test.at(r, c) = dmat.at(r, c);
    for (size_t r = 0; r < s.n; ++r) test.at(r, dim) = d[r];
    bool in_hull = rank(test) == dim;
    bool in_face = std::binary_search(face.begin(), face.end(), i);
    if (in_hull && !in_face)
      throw Error(Errc::InvalidFace, "face indices are not the full intersection with their affine hull");
    if (!in_hull && in_face)
      throw Error(Errc::InvalidFace, "face point outside the face's affine hull");
  }
  if (dim == 0) {
    // vertex: one-point support in a 1-dimensional chart at the origin
    SignedSupport out;
    out.n = 1;
    out.points.push_back(QVec{Rat(0)});
    out.signs.push_back(s.signs[face[0]]);
    return out;
  }
  SignedSupport out;
  out.n = dim;
  for (size_t fi : face) {
    out.points.push_back(solve_consistent(dmat, vec_sub(s.points[fi], p0)));
    out.signs.push_back(s.signs[fi]);
  }
  return out;
}

// Discriminant routines fix eps_last = -1; flip the whole sign vector when
// needed (Z(f_c) = Z(f_{-c})) and report the flip.
inline std::pair<SignedSupport, bool> oriented_for_discriminant(const SignedSupport& s) {
  if (s.signs.back() > 0) return {s.flipped(), true};
  return {s, false};
}

}  // namespace adisc
