#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adisc/discriminant.hpp"
#include "adisc/separation.hpp"
#include "adisc/support.hpp"

namespace adisc::pentanomial {

// Coefficients of the quadratic critical polynomial q_B(t) = a t^2 + b t + c
// for the standard position A+ = {0, e1, e2}, A- = {(x1,y1), (x2,y2)}.
struct QbCoefficients {
  Rat a, b, c;
};

inline QbCoefficients qb_from_xy(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
  QbCoefficients q;
  q.a = -x1 * y1 * (Rat(1) - x1 - y1);
  q.c = -x2 * y2 * (Rat(1) - x2 - y2);
  q.b = -x1 * x1 * y2 * y2 + Rat(2) * x1 * x2 * y1 * y2 - x2 * x2 * y1 * y1 + x1 * x1 * y2 +
        y2 * y2 * x1 + x2 * x2 * y1 + y1 * y1 * x2 - x1 * y2 - x2 * y1;
  return q;
}

// the Gale dual in standard position (rows follow the point order)
inline GaleDual standard_gale(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
  QMat b(5, 2);
  b.at(0, 0) = Rat(1) - x1 - y1;
  b.at(0, 1) = Rat(1) - x2 - y2;
  b.at(1, 0) = x1;
  b.at(1, 1) = x2;
  b.at(2, 0) = y1;
  b.at(2, 1) = y2;
  b.at(3, 0) = Rat(-1);
  b.at(4, 1) = Rat(-1);
  return GaleDual{std::move(b)};
}

// Chamber of a point in the arrangement of the three facet lines of the unit
// simplex: x = 0, y = 0, x + y = 1.
struct ChamberLabel {
  enum class Kind { kSimplex, kNegCone, kPosChamber, kFacetLine } kind;
  size_t index = 0;  // cone/chamber index for kNegCone / kPosChamber
  bool strict = true;
};

inline ChamberLabel chamber_of(const Rat& x, const Rat& y) {
  int sx = x.sign();
  int sy = y.sign();
  int sh = (Rat(1) - x - y).sign();
  ChamberLabel l{ChamberLabel::Kind::kFacetLine, 0, false};
  if (sx == 0 || sy == 0 || sh == 0) return l;
  l.strict = true;
  if (sx > 0 && sy > 0 && sh > 0) {
    l.kind = ChamberLabel::Kind::kSimplex;
  } else if (sx < 0 && sy < 0) {
    l.kind = ChamberLabel::Kind::kNegCone;
    l.index = 0;
  } else if (sy < 0 && sh < 0) {
    l.kind = ChamberLabel::Kind::kNegCone;
    l.index = 1;
  } else if (sx < 0 && sh < 0) {
    l.kind = ChamberLabel::Kind::kNegCone;
    l.index = 2;
  } else if (sx > 0 && sy > 0 && sh < 0) {
    l.kind = ChamberLabel::Kind::kPosChamber;
    l.index = 0;
  } else if (sx < 0 && sy > 0 && sh > 0) {
    l.kind = ChamberLabel::Kind::kPosChamber;
    l.index = 1;
  } else {
    l.kind = ChamberLabel::Kind::kPosChamber;  // sx > 0, sy < 0, sh > 0
    l.index = 2;
  }
  return l;
}

struct StandardizedPentanomial {
  enum class State { kStandard, kDimensionClause } state = State::kStandard;
  SignedSupport support;    // standardized support (valid in both states)
  Rat x1, y1, x2, y2;       // negative points, standard coordinates
  AffineMap transform;      // applied point map
  bool flipped = false;     // global sign flip used (mirrored 2+3 split)
  ChamberLabel label1, label2;
};

// Map the three-point sign class onto {0, e1, e2} with det(M) > 0; flip the
// sign vector first when the negatives are the three-point class.
inline StandardizedPentanomial standardize(const SignedSupport& input) {
  if (input.n != 2 || input.count() != 5)
    throw Error(Errc::InvalidInput, "the classifier handles bivariate 5-nomials");
  AhatMatrix ahat = build_ahat(input);
  if (!ahat.full_dimensional())
    throw Error(Errc::NotFullDimensional, "the classifier needs a full-dimensional support");

  auto affinely_independent3 = [&](const SignedSupport& s, const std::vector<size_t>& idx) {
    if (idx.size() != 3) return false;
    QMat d(2, 2);
    for (size_t c = 0; c < 2; ++c)
      for (size_t r = 0; r < 2; ++r)
        d.at(r, c) = s.points[idx[c + 1]][r] - s.points[idx[0]][r];
    return !det(d).is_zero();
  };

  StandardizedPentanomial out;
  SignedSupport s = input;
  std::vector<size_t> pos = s.positive_indices();
  if (!affinely_independent3(s, pos)) {
    SignedSupport f = s.flipped();
    std::vector<size_t> fpos = f.positive_indices();
    if (affinely_independent3(f, fpos)) {
      s = std::move(f);
      out.flipped = true;
      pos = std::move(fpos);
    } else {
      // Neither class is a planar triangle: the two-critical-point geometry
      // is ruled out by the dimension clause.
      out.state = StandardizedPentanomial::State::kDimensionClause;
      out.support = std::move(s);
      return out;
    }
  }

  // order the triangle so det[(1,1,1); (a1,a2,a3)] > 0
  QMat dm(3, 3);
  for (size_t c = 0; c < 3; ++c) {
    dm.at(0, c) = Rat(1);
    dm.at(1, c) = s.points[pos[c]][0];
    dm.at(2, c) = s.points[pos[c]][1];
  }
  if (det(dm).sign() < 0) std::swap(pos[1], pos[2]);
  // M(a2 - a1) = e1, M(a3 - a1) = e2, v = -M a1
  QMat cols(2, 2);
  for (size_t r = 0; r < 2; ++r) {
    cols.at(r, 0) = s.points[pos[1]][r] - s.points[pos[0]][r];
    cols.at(r, 1) = s.points[pos[2]][r] - s.points[pos[0]][r];
  }
  out.transform.m = inverse(cols);
  out.transform.v = vec_scale(out.transform.m.apply(s.points[pos[0]]), Rat(-1));

  std::vector<size_t> neg = s.negative_indices();
  std::vector<QVec> pts;
  std::vector<int> signs;
  for (size_t i : pos) {
    pts.push_back(out.transform.apply(s.points[i]));
    signs.push_back(1);
  }
  for (size_t i : neg) {
    pts.push_back(out.transform.apply(s.points[i]));
    signs.push_back(-1);
  }
  out.support = make_support(std::move(pts), std::move(signs));
  out.x1 = out.support.points[3][0];
  out.y1 = out.support.points[3][1];
  out.x2 = out.support.points[4][0];
  out.y2 = out.support.points[4][1];
  out.label1 = chamber_of(out.x1, out.y1);
  out.label2 = chamber_of(out.x2, out.y2);
  return out;
}

inline QbCoefficients qb_coefficients(const StandardizedPentanomial& std_form) {
  if (std_form.state != StandardizedPentanomial::State::kStandard)
    throw Error(Errc::InvalidInput, "no standard coordinates under the dimension clause");
  return qb_from_xy(std_form.x1, std_form.y1, std_form.x2, std_form.y2);
}

struct Classification {
  enum class Verdict {
    kEmptyDiscriminant,
    kZeroCritical,
    kOneCritical,
    kTwoCritical,
    kBoundaryCase,
  } verdict = Verdict::kEmptyDiscriminant;
  std::string case_label;
  std::vector<std::string> inequalities_satisfied;
  std::vector<std::string> inequalities_violated;
  std::optional<StandardizedPentanomial> standardized;
  std::optional<QbCoefficients> qb;
  int exact_count = -1;  // critical-point count where determined (always, except boundary)

  int count_or(int fallback) const { return exact_count >= 0 ? exact_count : fallback; }
};

namespace detail {

// critical points of the standard-position parametrization, counted exactly
// from the closed-form quadratic and the standard sign constraints
inline int count_standard(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
  QbCoefficients q = qb_from_xy(x1, y1, x2, y2);
  QPoly poly(QVec{q.c, q.b, q.a});
  if (poly.is_zero()) return 0;
  GaleDual g = standard_gale(x1, y1, x2, y2);
  discriminant::ParamDomain dom = discriminant::domain_intervals(g, {1, 1, 1, -1, -1});
  if (dom.empty()) return 0;
  RealRoots rr(poly);
  int count = 0;
  Rat width(1, 1000000000000LL);
  for (auto& root : rr.roots()) {
    rr.refine(root, width);
    if (discriminant::root_in_domain(rr, root, dom)) ++count;
  }
  return count;
}

// the triangle rotation (x, y) -> (y, 1 - x - y): vertices 0 -> 2 -> 1 -> 0,
// chambers P^{+,i} -> P^{+,sigma(i)} with sigma = (0 2 1)
inline void rotate_xy(Rat& x, Rat& y) {
  Rat nx = y, ny = Rat(1) - x - y;
  x = nx;
  y = ny;
}
inline size_t rotate_chamber(size_t i) { return i == 0 ? 2 : (i == 1 ? 0 : 1); }

}  // namespace detail

// The complete bivariate 5-nomial classifier. Dispatches on the chamber
// labels of the two negative points; the final count is exact.
inline Classification classify(const SignedSupport& input) {
  if (input.n != 2 || input.count() != 5)
    throw Error(Errc::InvalidInput, "the classifier handles bivariate 5-nomials");
  if (!build_ahat(input).full_dimensional())
    throw Error(Errc::NotFullDimensional, "the classifier needs a full-dimensional support");
  Classification out;

  // separation decides emptiness of the discriminant outright
  if (auto h = separation::has_nontrivial_separating_hyperplane(input)) {
    out.verdict = Classification::Verdict::kEmptyDiscriminant;
    out.case_label = "separating-hyperplane";
    out.exact_count = 0;
    return out;
  }

  StandardizedPentanomial std_form = standardize(input);
  if (std_form.state == StandardizedPentanomial::State::kDimensionClause) {
    // no planar triangle in either class: at most one critical point; the
    // exact count comes from the generic codimension-2 machinery
    auto [os, flipped] = oriented_for_discriminant(std_form.support);
    GaleDual g = gale_dual(build_ahat(os));
    discriminant::CriticalPoints cp = discriminant::critical_points(g, os.signs);
    out.standardized = std_form;
    out.case_label = "dimension-clause";
    out.exact_count = cp.qb_is_zero ? 0 : static_cast<int>(cp.points.size());
    out.verdict = out.exact_count == 0 ? Classification::Verdict::kZeroCritical
                                       : Classification::Verdict::kOneCritical;
    return out;
  }

  out.standardized = std_form;
  out.qb = qb_coefficients(std_form);
  const ChamberLabel& l1 = std_form.label1;
  const ChamberLabel& l2 = std_form.label2;
  using K = ChamberLabel::Kind;

  int count = detail::count_standard(std_form.x1, std_form.y1, std_form.x2, std_form.y2);
  out.exact_count = count;

  auto verdict_from_count = [&](int c) {
    return c == 0 ? Classification::Verdict::kZeroCritical
                  : (c == 1 ? Classification::Verdict::kOneCritical
                            : Classification::Verdict::kTwoCritical);
  };

  if (l1.kind == K::kFacetLine || l2.kind == K::kFacetLine) {
    // on a supporting line of a facet: q_B drops to two terms, so at most one
    out.case_label = "facet-line-degenerate";
    out.verdict = verdict_from_count(count);
    return out;
  }
  if (l1.kind == K::kSimplex && l2.kind == K::kSimplex) {
    out.case_label = "simplex-interior";
    out.verdict = Classification::Verdict::kZeroCritical;
    return out;
  }
  bool case1 = (l1.kind == K::kSimplex && l2.kind == K::kPosChamber) ||
               (l2.kind == K::kSimplex && l1.kind == K::kPosChamber);
  bool case2 = l1.kind == K::kNegCone && l2.kind == K::kPosChamber && l1.index == l2.index;
  bool case2m = l2.kind == K::kNegCone && l1.kind == K::kPosChamber && l2.index == l1.index;
  bool case3 = (l1.kind == K::kSimplex && l2.kind == K::kNegCone) ||
               (l2.kind == K::kSimplex && l1.kind == K::kNegCone);
  if (case1 || case2 || case2m) {
    out.case_label = case1 ? "simplex-poschamber" : "negcone-poschamber";
    out.verdict = verdict_from_count(count);
    return out;
  }
  if (case3) {
    out.case_label = "simplex-negcone";
    out.verdict = Classification::Verdict::kOneCritical;
    return out;
  }
  if (l1.kind == K::kPosChamber && l2.kind == K::kPosChamber && l1.index != l2.index) {
    // rotate (and possibly swap the negative labels) until the pair sits in
    // (P^{+,1}, P^{+,2}); the orbit of (1,2) under the rotation is
    // {(1,2), (0,1), (2,0)}
    Rat x1 = std_form.x1, y1 = std_form.y1, x2 = std_form.x2, y2 = std_form.y2;
    size_t c1 = l1.index, c2 = l2.index;
    bool swapped = false;
    auto in_orbit = [](size_t a, size_t b) {
      return (a == 1 && b == 2) || (a == 0 && b == 1) || (a == 2 && b == 0);
    };
    if (!in_orbit(c1, c2)) {
      std::swap(x1, x2);
      std::swap(y1, y2);
      std::swap(c1, c2);
      swapped = true;
    }
    int rotations = 0;
    while (!(c1 == 1 && c2 == 2)) {
      detail::rotate_xy(x1, y1);
      detail::rotate_xy(x2, y2);
      c1 = detail::rotate_chamber(c1);
      c2 = detail::rotate_chamber(c2);
      if (++rotations > 2) throw Error(Errc::InvalidInput, "rotation failed to normalize chambers");
    }
    out.case_label = "poschamber-pair";
    if (swapped) out.case_label += "/swapped";
    if (rotations) out.case_label += "/rotated" + std::to_string(rotations);

    // sub-chamber walls: int(P^{+,1,2}) needs y1 < 1, int(P^{+,2,1}) needs x2 < 1
    int wall1 = (Rat(1) - y1).sign();
    int wall2 = (Rat(1) - x2).sign();
    if (wall1 == 0 || wall2 == 0) {
      out.verdict = Classification::Verdict::kBoundaryCase;
      out.case_label += "/on-subchamber-wall";
      out.exact_count = count;  // advisory: the theorem does not cover the wall
      return out;
    }
    if (wall1 < 0 || wall2 < 0) {
      out.case_label += "/outside-subchambers";
      out.verdict = verdict_from_count(count);
      return out;
    }
    QbCoefficients q = qb_from_xy(x1, y1, x2, y2);
    Rat disc = q.b * q.b - Rat(4) * q.a * q.c;
    Rat left = Rat(2) * x2 * y1 * (Rat(1) - x1 - y1) + q.b;
    Rat right = Rat(2) * x1 * y2 * (Rat(1) - x1 - y1) + q.b;
    auto record = [&](bool ok, const std::string& name) {
      (ok ? out.inequalities_satisfied : out.inequalities_violated).push_back(name);
      return ok;
    };
    bool all = true;
    all &= record(disc.sign() > 0, "b^2 - 4ac > 0");
    all &= record(disc < left * left, "b^2 - 4ac < (2 x2 y1 (1-x1-y1) + b)^2");
    all &= record(left.sign() > 0, "0 < 2 x2 y1 (1-x1-y1) + b");
    all &= record(disc < right * right, "b^2 - 4ac < (2 x1 y2 (1-x1-y1) + b)^2");
    all &= record(right.sign() < 0, "0 > 2 x1 y2 (1-x1-y1) + b");
    out.verdict = all ? Classification::Verdict::kTwoCritical : verdict_from_count(count);
    return out;
  }
  // remaining combinations are separable and caught above; landing here means
  // the geometry and the separation oracle disagree
  throw Error(Errc::InvalidInput, "chamber dispatch reached an impossible configuration");
}

// ---- Remark 5.6 region scan -----------------------------------------------

struct RegionScan {
  Rat x1, y1;
  std::vector<Rat> xs, ys;          // grid coordinates
  std::vector<std::vector<bool>> feasible;  // [iy][ix]
  size_t feasible_count = 0;
};

inline bool two_critical_inequalities(const Rat& x1, const Rat& y1, const Rat& x2,
                                      const Rat& y2) {
  // requires (x1,y1) in int(P^{+,1,2}) and (x2,y2) in int(P^{+,2,1})
  if (!(x1.sign() < 0 && y1.sign() > 0 && y1 < Rat(1) && (Rat(1) - x1 - y1).sign() > 0))
    return false;
  if (!(x2.sign() > 0 && x2 < Rat(1) && y2.sign() < 0 && (Rat(1) - x2 - y2).sign() > 0))
    return false;
  QbCoefficients q = qb_from_xy(x1, y1, x2, y2);
  Rat disc = q.b * q.b - Rat(4) * q.a * q.c;
  Rat left = Rat(2) * x2 * y1 * (Rat(1) - x1 - y1) + q.b;
  Rat right = Rat(2) * x1 * y2 * (Rat(1) - x1 - y1) + q.b;
  return disc.sign() > 0 && disc < left * left && left.sign() > 0 && disc < right * right &&
         right.sign() < 0;
}

inline RegionScan region_scan(const Rat& x1, const Rat& y1, size_t grid,
                              const Rat& x2_lo = Rat(0), const Rat& x2_hi = Rat(1),
                              const Rat& y2_lo = Rat(-2), const Rat& y2_hi = Rat(0)) {
  if (!(x1.sign() < 0 && y1.sign() > 0 && y1 < Rat(1) && (Rat(1) - x1 - y1).sign() > 0))
    throw Error(Errc::InvalidInput, "(x1, y1) must lie in the interior of P^{+,1,2}");
  RegionScan scan;
  scan.x1 = x1;
  scan.y1 = y1;
  Rat dx = (x2_hi - x2_lo) / Rat(static_cast<int64_t>(grid));
  Rat dy = (y2_hi - y2_lo) / Rat(static_cast<int64_t>(grid));
  for (size_t i = 0; i < grid; ++i)
    scan.xs.push_back(x2_lo + dx * Rat(static_cast<int64_t>(2 * i + 1)) / Rat(2));
  for (size_t i = 0; i < grid; ++i)
    scan.ys.push_back(y2_lo + dy * Rat(static_cast<int64_t>(2 * i + 1)) / Rat(2));
  for (const Rat& y2 : scan.ys) {
    std::vector<bool> row;
    for (const Rat& x2 : scan.xs) {
      bool ok = two_critical_inequalities(x1, y1, x2, y2);
      row.push_back(ok);
      if (ok) ++scan.feasible_count;
    }
    scan.feasible.push_back(std::move(row));
  }
  return scan;
}

// feasible y2 < 0 for a fixed column, refining the grid until found
inline std::optional<Rat> find_feasible_y2(const Rat& x1, const Rat& y1, const Rat& x2,
                                           int max_depth = 14) {
  Rat lo(-4), hi(0);
  int64_t steps = 16;
  for (int depth = 0; depth < max_depth; ++depth) {
    Rat dy = (hi - lo) / Rat(steps);
    for (int64_t i = 0; i < steps; ++i) {
      Rat y2 = lo + dy * Rat(2 * i + 1) / Rat(2);
      if (two_critical_inequalities(x1, y1, x2, y2)) return y2;
    }
    steps *= 2;
  }
  return std::nullopt;
}

// ---- the n-cusp family -----------------------------------------------------

struct CuspFamily {
  GaleDual gale;
  std::vector<int> eps;
  std::vector<Rat> residues;  // a_1 ... a_{n+1}
};

// Partial-fraction construction: q~_B of the returned matrix has the input
// parameters as its positive roots, so the curve carries exactly n cusps.
inline CuspFamily cusp_family(const std::vector<Rat>& mus) {
  size_t n = mus.size();
  if (n == 0) throw Error(Errc::InvalidInput, "need at least one parameter");
  for (const Rat& m : mus) {
    if (m.sign() <= 0) throw Error(Errc::InvalidInput, "parameters must be positive");
    if (m == Rat(1)) throw Error(Errc::InvalidInput, "parameters must differ from 1");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (mus[i] == mus[j]) throw Error(Errc::InvalidInput, "parameters must be distinct");

  auto f_at = [&](const Rat& t) {
    Rat v(1);
    for (const Rat& m : mus) v *= t - m;
    return v;
  };
  CuspFamily out;
  // residues of f/g at -mu_i and at -1, g = prod (t + mu_j) * (t + 1)
  for (size_t i = 0; i < n; ++i) {
    Rat denom = -mus[i] + Rat(1);
    for (size_t j = 0; j < n; ++j)
      if (j != i) denom *= -mus[i] + mus[j];
    out.residues.push_back(f_at(-mus[i]) / denom);
  }
  {
    Rat denom(1);
    for (size_t j = 0; j < n; ++j) denom *= -Rat(1) + mus[j];
    out.residues.push_back(f_at(Rat(-1)) / denom);
  }
  // construction invariants: sum a_i/mu_i + a_{n+1} = (-1)^n, sum a_i = 1
  Rat s1, s2;
  for (size_t i = 0; i < n; ++i) {
    if (out.residues[i].is_zero())
      throw Error(Errc::InvalidInput, "degenerate parameters: a residue vanished");
    s1 += out.residues[i] / mus[i];
    s2 += out.residues[i];
  }
  if (out.residues[n].is_zero())
    throw Error(Errc::InvalidInput, "degenerate parameters: a residue vanished");
  s1 += out.residues[n];
  s2 += out.residues[n];
  Rat sign_n = n % 2 == 0 ? Rat(1) : Rat(-1);
  if (s1 != sign_n || s2 != Rat(1))
    throw Error(Errc::InvalidInput, "partial-fraction identities failed");

  QMat b(n + 3, 2);
  for (size_t i = 0; i < n; ++i) {
    b.at(i, 0) = out.residues[i] / mus[i];
    b.at(i, 1) = out.residues[i];
  }
  b.at(n, 0) = out.residues[n];
  b.at(n, 1) = out.residues[n];
  b.at(n + 1, 0) = -sign_n;  // (-1)^{n+1}
  b.at(n + 2, 1) = Rat(-1);
  out.gale = GaleDual{std::move(b)};
  for (size_t i = 0; i <= n; ++i) out.eps.push_back(out.residues[i].sign());
  out.eps.push_back(n % 2 == 0 ? -1 : 1);  // sign of (-1)^{n+1}
  out.eps.push_back(-1);
  return out;
}

}  // namespace adisc::pentanomial
