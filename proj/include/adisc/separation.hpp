#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "adisc/simplex.hpp"
#include "adisc/support.hpp"

namespace adisc::separation {

struct Hyperplane {
  QVec v;  // nonzero normal
  Rat a;   // offset: H = { v.mu = a }
  enum class Kind { kSeparating, kNonTrivial, kVeryStrict } kind = Kind::kSeparating;

  // signed classification of one point: +1 strictly positive side, 0 on H
  int side(const QVec& p) const { return (dot(v, p) - a).sign(); }
};

// Exactly one of the two fields is populated (Stiemke alternative):
// either a non-trivial separating hyperplane, or u > 0 with Ahat_eps u = 0.
struct StiemkeResult {
  std::optional<Hyperplane> hyperplane;
  QVec kernel_witness;
  bool trivially_separable = false;  // one sign class is empty

  bool separable() const { return hyperplane.has_value(); }
};

namespace detail {

inline std::optional<QVec> kernel_witness(const QMat& ahat_eps) {
  size_t m = ahat_eps.cols();
  std::vector<Constraint> cons;
  for (size_t r = 0; r < ahat_eps.rows(); ++r) cons.push_back({ahat_eps.row(r), Rel::EQ, Rat(0)});
  for (size_t i = 0; i < m; ++i) {
    QVec e(m);
    e[i] = Rat(1);
    cons.push_back({e, Rel::GE, Rat(1)});
  }
  return lp_feasible(m, cons);
}

inline std::optional<QVec> hyperplane_witness(const QMat& ahat_eps) {
  // w in R^{n+1} with Ahat_eps^T w >= 0, and 1^T Ahat_eps^T w >= 1
  size_t nw = ahat_eps.rows();
  size_t m = ahat_eps.cols();
  std::vector<Constraint> cons;
  QVec sum(nw);
  for (size_t j = 0; j < m; ++j) {
    QVec row(nw);
    for (size_t i = 0; i < nw; ++i) row[i] = ahat_eps.at(i, j);
    sum = vec_add(sum, row);
    cons.push_back({row, Rel::GE, Rat(0)});
  }
  cons.push_back({sum, Rel::GE, Rat(1)});
  return lp_feasible(nw, cons);
}

inline Hyperplane hyperplane_from_w(const SignedSupport& s, const QVec& w) {
  Hyperplane h;
  h.a = -w[0];
  h.v = QVec(w.begin() + 1, w.end());
  h.kind = Hyperplane::Kind::kNonTrivial;
  bool touches = false;
  for (const QVec& p : s.points)
    if (h.side(p) == 0) touches = true;
  if (!touches) h.kind = Hyperplane::Kind::kVeryStrict;
  return h;
}

// Any hyperplane with the whole support strictly on the populated side.
inline Hyperplane trivial_hyperplane(const SignedSupport& s) {
  QVec v(s.n);
  v[0] = Rat(1);
  Rat lo = dot(v, s.points[0]), hi = lo;
  for (const QVec& p : s.points) {
    Rat d = dot(v, p);
    if (d < lo) lo = d;
    if (d > hi) hi = d;
  }
  Hyperplane h;
  h.v = std::move(v);
  h.a = s.negative_indices().empty() ? lo - Rat(1) : hi + Rat(1);
  h.kind = Hyperplane::Kind::kVeryStrict;
  return h;
}

}  // namespace detail

inline StiemkeResult stiemke(const SignedSupport& s) {
  StiemkeResult out;
  if (s.positive_indices().empty() || s.negative_indices().empty()) {
    out.trivially_separable = true;
    out.hyperplane = detail::trivial_hyperplane(s);
    return out;
  }
  QMat ahat_eps = ahat_signed(build_ahat(s), s.signs);
  if (auto u = detail::kernel_witness(ahat_eps)) {
    out.kernel_witness = *u;
    return out;
  }
  auto w = detail::hyperplane_witness(ahat_eps);
  if (!w)
    throw Error(Errc::InvalidInput, "Stiemke alternative produced no witness on either side");
  out.hyperplane = detail::hyperplane_from_w(s, *w);
  return out;
}

inline std::optional<Hyperplane> has_nontrivial_separating_hyperplane(const SignedSupport& s) {
  return stiemke(s).hyperplane;
}

// Margin LP: maximize delta subject to Ahat_eps^T w >= delta*1, delta <= 1.
// Very strict iff the optimal margin is positive.
inline std::optional<Hyperplane> has_very_strict_separating_hyperplane(const SignedSupport& s) {
  if (s.positive_indices().empty() || s.negative_indices().empty())
    return detail::trivial_hyperplane(s);
  QMat ahat_eps = ahat_signed(build_ahat(s), s.signs);
  size_t nw = ahat_eps.rows();
  std::vector<Constraint> cons;
  for (size_t j = 0; j < ahat_eps.cols(); ++j) {
    QVec row(nw + 1);
    for (size_t i = 0; i < nw; ++i) row[i] = ahat_eps.at(i, j);
    row[nw] = Rat(-1);
    cons.push_back({row, Rel::GE, Rat(0)});
  }
  QVec cap(nw + 1);
  cap[nw] = Rat(1);
  cons.push_back({cap, Rel::LE, Rat(1)});
  cons.push_back({cap, Rel::GE, Rat(0)});
  QVec obj(nw + 1);
  obj[nw] = Rat(-1);  // maximize delta
  LpSolution sol = lp_solve(nw + 1, cons, obj);
  if (sol.status != LpSolution::kOptimal || sol.objective.sign() >= 0) return std::nullopt;
  QVec w(sol.x.begin(), sol.x.begin() + nw);
  Hyperplane h = detail::hyperplane_from_w(s, w);
  h.kind = Hyperplane::Kind::kVeryStrict;
  return h;
}

struct Face {
  std::vector<size_t> indices;  // all support points on the face
  size_t dim = 0;
  bool proper = true;
};

namespace detail {

inline std::vector<size_t> affine_closure(const SignedSupport& s,
                                          const std::vector<size_t>& seed) {
  const QVec& p0 = s.points[seed[0]];
  std::vector<QVec> dirs;
  for (size_t si : seed) {
    QVec d = vec_sub(s.points[si], p0);
    QMat test(s.n, dirs.size() + 1);
    for (size_t c = 0; c < dirs.size(); ++c)
      for (size_t r = 0; r < s.n; ++r) test.at(r, c) = dirs[c][r];
    for (size_t r = 0; r < s.n; ++r) test.at(r, dirs.size()) = d[r];
    if (rank(test) == dirs.size() + 1) dirs.push_back(d);
  }
  QMat dmat(s.n, dirs.size());
  for (size_t c = 0; c < dirs.size(); ++c)
    for (size_t r = 0; r < s.n; ++r) dmat.at(r, c) = dirs[c][r];
  std::vector<size_t> out;
  for (size_t i = 0; i < s.count(); ++i) {
    QVec d = vec_sub(s.points[i], p0);
    QMat test(s.n, dirs.size() + 1);
    for (size_t c = 0; c < dirs.size(); ++c)
      for (size_t r = 0; r < s.n; ++r) test.at(r, c) = dmat.at(r, c);
    for (size_t r = 0; r < s.n; ++r) test.at(r, dirs.size()) = d[r];
    if (rank(test) == dirs.size()) out.push_back(i);
  }
  return out;
}

// is S (affinely closed in A) the point set of a proper face of Conv(A)?
inline bool is_proper_face(const SignedSupport& s, const std::vector<size_t>& closed) {
  std::vector<Constraint> cons;
  size_t nv = s.n + 1;  // (v, a)
  std::set<size_t> in(closed.begin(), closed.end());
  for (size_t i = 0; i < s.count(); ++i) {
    QVec row(nv);
    for (size_t j = 0; j < s.n; ++j) row[j] = s.points[i][j];
    row[s.n] = Rat(-1);
    if (in.count(i))
      cons.push_back({row, Rel::EQ, Rat(0)});  // v.p = a
    else
      cons.push_back({row, Rel::LE, Rat(-1)});  // v.p <= a - 1
  }
  return lp_feasible(nv, cons).has_value();
}

}  // namespace detail

// Proper faces (vertices, edges, facets for n = 3) plus the full polytope,
// by exhaustive candidate enumeration with exact supporting-hyperplane LPs.
inline std::vector<Face> enumerate_faces(const SignedSupport& s) {
  if (s.n > 3) throw Error(Errc::DimensionTooLarge, "face enumeration implemented for n <= 3");
  std::set<std::vector<size_t>> seen;
  std::vector<Face> faces;
  auto consider = [&](const std::vector<size_t>& seed) {
    std::vector<size_t> closed = detail::affine_closure(s, seed);
    if (closed.size() == s.count()) return;  // affine hull of everything: not proper
    if (!seen.insert(closed).second) return;
    if (!detail::is_proper_face(s, closed)) return;
    Face f;
    f.indices = closed;
    // face dimension = rank of the difference set
    if (closed.size() > 1) {
      QMat d(s.n, closed.size() - 1);
      for (size_t c = 1; c < closed.size(); ++c)
        for (size_t r = 0; r < s.n; ++r)
          d.at(r, c - 1) = s.points[closed[c]][r] - s.points[closed[0]][r];
      f.dim = rank(d);
    }
    faces.push_back(std::move(f));
  };
  for (size_t i = 0; i < s.count(); ++i) consider({i});
  for (size_t i = 0; i < s.count(); ++i)
    for (size_t j = i + 1; j < s.count(); ++j) consider({i, j});
  if (s.n == 3)
    for (size_t i = 0; i < s.count(); ++i)
      for (size_t j = i + 1; j < s.count(); ++j)
        for (size_t k = j + 1; k < s.count(); ++k) consider({i, j, k});
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.indices < b.indices;
  });
  Face full;
  full.proper = false;
  full.indices.resize(s.count());
  for (size_t i = 0; i < s.count(); ++i) full.indices[i] = i;
  {
    QMat d(s.n, s.count() - 1);
    for (size_t c = 1; c < s.count(); ++c)
      for (size_t r = 0; r < s.n; ++r) d.at(r, c - 1) = s.points[c][r] - s.points[0][r];
    full.dim = rank(d);
  }
  faces.push_back(std::move(full));
  return faces;
}

struct FaceVerdict {
  Face face;
  bool separable = false;
  std::optional<Hyperplane> hyperplane;  // in face-chart coordinates
};

struct FaceReport {
  std::vector<FaceVerdict> verdicts;
  bool all_separable = true;
};

// Theorem-level certificate: every face of Conv(A) admits a non-trivial
// separating hyperplane for its restricted signed support.
inline FaceReport all_faces_separable(const SignedSupport& s) {
  FaceReport report;
  for (Face& f : enumerate_faces(s)) {
    FaceVerdict v;
    SignedSupport sub = f.proper || f.dim < s.n ? restrict_to_face(s, f.indices) : s;
    StiemkeResult r = stiemke(sub);
    v.separable = r.separable();
    v.hyperplane = r.hyperplane;
    v.face = std::move(f);
    if (!v.separable) report.all_separable = false;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

struct SeparabilityReport {
  size_t count = 0;       // sign vectors without a non-trivial separating hyperplane
  BigInt bound;           // 2 * sum_{i<k} C(n+k, i)
  size_t codim = 0;
  std::vector<std::vector<int>> nonseparable;  // populated when #A <= 12
};

inline BigInt binomial(size_t n, size_t k) {
  BigInt r(1);
  for (size_t i = 0; i < k; ++i) r = (r * BigInt(static_cast<int64_t>(n - i))) / BigInt(static_cast<int64_t>(i + 1));
  return r;
}

inline SeparabilityReport count_nonseparable_sign_vectors(const SignedSupport& s) {
  size_t m = s.count();
  if (m > 20) throw Error(Errc::TooManyPoints, "sign-vector enumeration capped at 20 points");
  AhatMatrix ahat = build_ahat(s);
  SeparabilityReport rep;
  rep.codim = ahat.codim;
  for (size_t i = 0; i < rep.codim; ++i) rep.bound = rep.bound + binomial(m - 1, i);
  rep.bound = rep.bound.mul_small(2);
  // eps and -eps have identical kernels, so scan eps_1 = +1 and double
  std::vector<int> eps(m, 1);
  for (uint64_t mask = 0; mask < (1ull << (m - 1)); ++mask) {
    for (size_t i = 1; i < m; ++i) eps[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
    if (detail::kernel_witness(ahat_signed(ahat, eps))) {
      rep.count += 2;
      if (m <= 12) {
        rep.nonseparable.push_back(eps);
        std::vector<int> neg(m);
        for (size_t i = 0; i < m; ++i) neg[i] = -eps[i];
        rep.nonseparable.push_back(std::move(neg));
      }
    }
  }
  return rep;
}

struct EnclosingPair {
  QVec v;
  Rat upper, lower;  // slab: lower <= v.mu <= upper
};

enum class Side { kPositive, kNegative };

// Strict enclosing hyperplanes of one sign class (n = 2): a slab holding the
// class, with opposite-class points strictly beyond both slab boundaries.
inline std::optional<EnclosingPair> strict_enclosing_hyperplanes(const SignedSupport& s,
                                                                 Side side) {
  if (s.n != 2)
    throw Error(Errc::DimensionTooLarge, "enclosing-hyperplane search implemented for n = 2");
  std::vector<size_t> inside =
      side == Side::kPositive ? s.positive_indices() : s.negative_indices();
  std::vector<size_t> outside =
      side == Side::kPositive ? s.negative_indices() : s.positive_indices();
  if (outside.size() < 2) return std::nullopt;
  if (outside.size() > 12)
    throw Error(Errc::TooManyPoints, "side-assignment enumeration capped at 12 points");
  size_t no = outside.size();
  for (uint64_t mask = 0; mask + 1 < (1ull << no); ++mask) {
    // bit i set: outside[i] assigned above the slab; else below
    std::vector<size_t> above, below;
    for (size_t i = 0; i < no; ++i)
      ((mask >> i) & 1 ? above : below).push_back(outside[i]);
    if (above.empty() || below.empty()) continue;
    // vars: (v1, v2, a, b)
    std::vector<Constraint> cons;
    auto coeff = [&](const QVec& p, Rat ca, Rat cb) {
      return QVec{p[0], p[1], ca, cb};
    };
    for (size_t i : inside) {
      cons.push_back({coeff(s.points[i], Rat(-1), Rat(0)), Rel::LE, Rat(0)});  // v.p - a <= 0
      cons.push_back({coeff(s.points[i], Rat(0), Rat(-1)), Rel::GE, Rat(0)});  // v.p - b >= 0
    }
    QVec sum_above(4), sum_below(4);
    for (size_t i : above) {
      QVec c = coeff(s.points[i], Rat(-1), Rat(0));
      cons.push_back({c, Rel::GE, Rat(0)});  // v.q >= a
      sum_above = vec_add(sum_above, c);
    }
    for (size_t i : below) {
      QVec c = coeff(s.points[i], Rat(0), Rat(-1));
      cons.push_back({c, Rel::LE, Rat(0)});  // v.q <= b
      sum_below = vec_sub(sum_below, c);
    }
    cons.push_back({sum_above, Rel::GE, Rat(1)});  // at least one strictly above
    cons.push_back({sum_below, Rel::GE, Rat(1)});  // at least one strictly below
    cons.push_back({QVec{Rat(0), Rat(0), Rat(1), Rat(-1)}, Rel::GE, Rat(0)});  // a >= b
    if (auto w = lp_feasible(4, cons)) {
      EnclosingPair pair;
      pair.v = QVec{(*w)[0], (*w)[1]};
      pair.upper = (*w)[2];
      pair.lower = (*w)[3];
      if (vec_is_zero(pair.v)) continue;  // degenerate certificate, keep searching
      return pair;
    }
  }
  return std::nullopt;
}

struct SimplexSeparation {
  struct Membership {
    enum class Kind { kSimplex, kNegCone, kNeither } kind = Kind::kNeither;
    size_t cone = 0;  // valid when kind == kNegCone
  };
  std::vector<Membership> membership;
  bool interior_witness = false;
  bool verdict = false;
};

// Classify A against an n-simplex P and its negative vertex cones P^{-,i}.
// Verdict: A+ in P, A- in the union of cones, and some point interior.
inline SimplexSeparation simplex_separation(const SignedSupport& s,
                                            const std::vector<QVec>& simplex) {
  size_t n = s.n;
  if (simplex.size() != n + 1)
    throw Error(Errc::DegenerateSimplex, "simplex needs n+1 vertices");
  QMat d(n, n);
  for (size_t c = 0; c < n; ++c)
    for (size_t r = 0; r < n; ++r) d.at(r, c) = simplex[c + 1][r] - simplex[0][r];
  if (det(d).is_zero()) throw Error(Errc::DegenerateSimplex, "simplex vertices are affinely dependent");

  // facet i: hyperplane through all vertices except i, P on the >= side
  std::vector<QVec> normal(n + 1);
  std::vector<Rat> offset(n + 1);
  for (size_t i = 0; i <= n; ++i) {
    std::vector<size_t> others;
    for (size_t j = 0; j <= n; ++j)
      if (j != i) others.push_back(j);
    // v spans the kernel of the (n-1) x n difference matrix of the facet
    QMat fd(n - 1 > 0 ? n - 1 : 1, n);
    if (n == 1) {
      // facet is a single point; normal along the axis
      for (size_t c = 0; c < n; ++c) fd.at(0, c) = Rat(0);
    } else {
      for (size_t r = 0; r + 1 < n; ++r)
        for (size_t c = 0; c < n; ++c)
          fd.at(r, c) = simplex[others[r + 1]][c] - simplex[others[0]][c];
    }
    QMat kb = kernel_basis(fd);
    QVec v = kb.col(0);
    Rat off = dot(v, simplex[others[0]]);
    if (dot(v, simplex[i]) < off) {
      v = vec_scale(v, Rat(-1));
      off = -off;
    }
    normal[i] = std::move(v);
    offset[i] = off;
  }

  SimplexSeparation out;
  out.membership.resize(s.count());
  for (size_t p = 0; p < s.count(); ++p) {
    std::vector<int> side(n + 1);
    for (size_t i = 0; i <= n; ++i) side[i] = (dot(normal[i], s.points[p]) - offset[i]).sign();
    bool in_p = true, strict_p = true;
    for (size_t i = 0; i <= n; ++i) {
      if (side[i] < 0) in_p = false;
      if (side[i] <= 0) strict_p = false;
    }
    if (in_p) {
      out.membership[p].kind = SimplexSeparation::Membership::Kind::kSimplex;
      if (strict_p) out.interior_witness = true;
      continue;
    }
    for (size_t i = 0; i <= n; ++i) {
      bool in_cone = side[i] >= 0, strict_cone = side[i] > 0;
      for (size_t j = 0; j <= n; ++j) {
        if (j == i) continue;
        if (side[j] > 0) in_cone = false;
        if (side[j] >= 0) strict_cone = false;
      }
      if (in_cone) {
        out.membership[p].kind = SimplexSeparation::Membership::Kind::kNegCone;
        out.membership[p].cone = i;
        if (strict_cone) out.interior_witness = true;
        break;
      }
    }
  }
  out.verdict = out.interior_witness;
  for (size_t p = 0; p < s.count(); ++p) {
    const auto& m = out.membership[p];
    if (s.signs[p] > 0 && m.kind != SimplexSeparation::Membership::Kind::kSimplex)
      out.verdict = false;
    if (s.signs[p] < 0 && m.kind != SimplexSeparation::Membership::Kind::kNegCone)
      out.verdict = false;
  }
  return out;
}

}  // namespace adisc::separation
