#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "adisc/polynomial.hpp"
#include "adisc/support.hpp"

namespace adisc::discriminant {

// Open interval with rational or infinite endpoints.
struct Interval {
  std::optional<Rat> lo, hi;  // nullopt = -inf / +inf

  bool contains(const Rat& mu) const {
    if (lo && mu <= *lo) return false;
    if (hi && mu >= *hi) return false;
    return true;
  }
};

// { mu : sign(B (mu,1)^T) = eps }, exactly, as a union of open intervals.
struct ParamDomain {
  std::vector<Interval> intervals;

  bool empty() const { return intervals.empty(); }
  bool contains(const Rat& mu) const {
    for (const Interval& iv : intervals)
      if (iv.contains(mu)) return true;
    return false;
  }
  bool contains(double mu) const { return contains(Rat::from_double(mu)); }
};

inline void require_codim2(const GaleDual& g) {
  if (g.k() != 2)
    throw Error(Errc::WrongCodimension,
                "operation requires codimension 2, got k = " + std::to_string(g.k()));
}

inline ParamDomain domain_intervals(const GaleDual& g, const std::vector<int>& eps) {
  require_codim2(g);
  if (eps.size() != g.m()) throw Error(Errc::InvalidInput, "sign vector length mismatch");
  if (eps.back() != -1)
    throw Error(Errc::InvalidInput,
                "domain parametrization fixes eps_last = -1 (flip the sign vector first)");
  ParamDomain dom;
  std::vector<Rat> cuts;
  for (size_t i = 0; i < g.m(); ++i) {
    const Rat& c1 = g.b.at(i, 0);
    const Rat& c2 = g.b.at(i, 1);
    if (c1.is_zero()) {
      if (c2.sign() != eps[i]) return dom;  // constant row with the wrong sign
    } else {
      cuts.push_back(-c2 / c1);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto matches = [&](const Rat& sample) {
    QVec v = g.apply_muhat(sample);
    for (size_t i = 0; i < g.m(); ++i)
      if (v[i].sign() != eps[i]) return false;
    return true;
  };
  size_t m = cuts.size();
  for (size_t c = 0; c <= m; ++c) {
    Rat sample;
    Interval iv;
    if (m == 0) {
      sample = Rat(0);
    } else if (c == 0) {
      sample = cuts[0] - Rat(1);
      iv.hi = cuts[0];
    } else if (c == m) {
      sample = cuts[m - 1] + Rat(1);
      iv.lo = cuts[m - 1];
    } else {
      sample = (cuts[c - 1] + cuts[c]) / Rat(2);
      iv.lo = cuts[c - 1];
      iv.hi = cuts[c];
    }
    if (matches(sample)) dom.intervals.push_back(iv);
  }
  return dom;
}

// xi-bar: B^T Log |B (mu,1)^T|, float evaluation
inline std::array<double, 2> xi_bar(const GaleDual& g, double mu) {
  double x = 0, y = 0;
  for (size_t i = 0; i < g.m(); ++i) {
    double b1 = g.b.at(i, 0).to_double(), b2 = g.b.at(i, 1).to_double();
    double l = std::log(std::fabs(b1 * mu + b2));
    x += b1 * l;
    y += b2 * l;
  }
  return {x, y};
}

inline std::array<double, 2> xi_bar_checked(const GaleDual& g, const ParamDomain& dom,
                                            double mu) {
  if (!dom.contains(mu)) throw Error(Errc::OutOfDomain, "mu outside the sign-feasible domain");
  return xi_bar(g, mu);
}

// xi on the full parameter: B^T Log |B lambda| (k = 2)
inline std::array<double, 2> xi_full(const GaleDual& g, const std::array<double, 2>& lambda) {
  double x = 0, y = 0;
  for (size_t i = 0; i < g.m(); ++i) {
    double b1 = g.b.at(i, 0).to_double(), b2 = g.b.at(i, 1).to_double();
    double l = std::log(std::fabs(b1 * lambda[0] + b2 * lambda[1]));
    x += b1 * l;
    y += b2 * l;
  }
  return {x, y};
}

// signed Horn-Kapranov uniformization: c = B lambda * exp(-alpha_i . x)
inline std::vector<double> horn_kapranov(const SignedSupport& s, const GaleDual& g,
                                         const QVec& lambda, const std::vector<double>& x) {
  if (lambda.size() != g.k()) throw Error(Errc::InvalidInput, "lambda dimension mismatch");
  QVec bl(g.m());
  for (size_t i = 0; i < g.m(); ++i) {
    for (size_t j = 0; j < g.k(); ++j) bl[i] += g.b.at(i, j) * lambda[j];
    if (bl[i].sign() != s.signs[i])
      throw Error(Errc::SignMismatch, "sign(B lambda) does not match the sign distribution");
  }
  std::vector<double> c(g.m());
  for (size_t i = 0; i < g.m(); ++i) {
    double dot_ax = 0;
    for (size_t j = 0; j < s.n; ++j) dot_ax += s.points[i][j].to_double() * x[j];
    c[i] = bl[i].to_double() * std::exp(-dot_ax);
  }
  return c;
}

// q_B and q~_B by exact symbolic expansion of the cleared-denominator sums
struct CriticalPolynomial {
  QPoly qb;   // sum_i b1_i^2 prod_{j != i} (B (mu,1))_j
  QPoly qbt;  // sum_i b2_i b1_i prod_{j != i} (B (mu,1))_j
};

inline CriticalPolynomial critical_polynomial(const GaleDual& g) {
  require_codim2(g);
  size_t m = g.m();
  std::vector<QPoly> lin(m);
  for (size_t i = 0; i < m; ++i) lin[i] = QPoly(QVec{g.b.at(i, 1), g.b.at(i, 0)});
  // prefix[i] = lin[0]*...*lin[i-1], suffix[i] = lin[i+1]*...*lin[m-1]
  std::vector<QPoly> prefix(m + 1), suffix(m + 1);
  prefix[0] = QPoly(QVec{Rat(1)});
  for (size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * lin[i];
  suffix[m] = QPoly(QVec{Rat(1)});
  for (size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * lin[i];
  CriticalPolynomial out;
  for (size_t i = 0; i < m; ++i) {
    if (g.b.at(i, 0).is_zero() && g.b.at(i, 1).is_zero()) continue;
    QPoly others = prefix[i] * suffix[i + 1];
    out.qb = out.qb + others.scaled(g.b.at(i, 0) * g.b.at(i, 0));
    out.qbt = out.qbt + others.scaled(g.b.at(i, 1) * g.b.at(i, 0));
  }
  return out;
}

struct CriticalPoint {
  RealRoots::Root root;     // isolated to width < 1e-12, exact when rational
  double mu;                // float position
  std::array<double, 2> image{};  // xi-bar at mu
};

struct CriticalPoints {
  std::vector<CriticalPoint> points;
  CriticalPolynomial poly;
  bool qb_is_zero = false;  // degenerate: the critical polynomial vanishes identically
};

inline bool root_in_domain(RealRoots& rr, RealRoots::Root& root, const ParamDomain& dom) {
  for (const Interval& iv : dom.intervals) {
    if (root.exact) return dom.contains(*root.exact);
    if (iv.lo && rr.compare(root, *iv.lo) <= 0) continue;
    if (root.exact) return dom.contains(*root.exact);  // comparison may have pinned it
    if (iv.hi && rr.compare(root, *iv.hi) >= 0) continue;
    if (root.exact) return dom.contains(*root.exact);
    return true;
  }
  return false;
}

inline CriticalPoints critical_points(const GaleDual& g, const std::vector<int>& eps) {
  CriticalPoints out;
  out.poly = critical_polynomial(g);
  if (out.poly.qb.is_zero()) {
    out.qb_is_zero = true;
    return out;
  }
  ParamDomain dom = domain_intervals(g, eps);
  if (dom.empty()) return out;
  RealRoots rr(out.poly.qb);
  Rat width(1, 1000000000000LL);
  for (auto& root : rr.roots()) {
    rr.refine(root, width);
    if (!root_in_domain(rr, root, dom)) continue;
    rr.refine(root, width);
    CriticalPoint cp;
    cp.root = root;
    cp.mu = root.approx();
    cp.image = xi_bar(g, cp.mu);
    out.points.push_back(std::move(cp));
  }
  return out;
}

// ---- curve sampling ------------------------------------------------------

struct CurveQuality {
  double step = 0.02;        // target image-space edge length inside the window
  std::optional<std::array<double, 4>> window;  // {x0, y0, x1, y1}
  int max_depth = 26;
  double cusp_radius = 1e-3;  // parameter-space densification near cusps
  double cusp_factor = 64.0;
};

struct CurveSample {
  double mu, x, y;
};

struct Polyline {
  std::vector<CurveSample> pts;
  size_t interval_id = 0;
};

struct DiscriminantCurve {
  std::vector<Polyline> polylines;
  std::vector<CriticalPoint> cusps;
  std::array<double, 4> window{-1, -1, 1, 1};  // sampling window {x0,y0,x1,y1}
  bool flipped_signs = false;                  // set by callers that flipped eps
};

namespace detail {

inline bool far_outside(const std::array<double, 2>& p, const std::array<double, 4>& w,
                        double factor) {
  double cx = (w[0] + w[2]) / 2, cy = (w[1] + w[3]) / 2;
  double hx = (w[2] - w[0]) / 2, hy = (w[3] - w[1]) / 2;
  return std::fabs(p[0] - cx) > factor * hx || std::fabs(p[1] - cy) > factor * hy ||
         !std::isfinite(p[0]) || !std::isfinite(p[1]);
}

struct IntervalMap {
  double lo = 0, hi = 0;
  bool lo_inf = false, hi_inf = false;

  double mu_at(double t) const {  // t in (0,1)
    if (!lo_inf && !hi_inf) return lo + (hi - lo) * t;
    if (!lo_inf) return lo + t / (1.0 - t);
    if (!hi_inf) return hi - (1.0 - t) / t;
    return std::tan(3.14159265358979323846 * (t - 0.5));
  }
  double t_at(double mu) const {
    if (!lo_inf && !hi_inf) return (mu - lo) / (hi - lo);
    if (!lo_inf) return (mu - lo) / (1.0 + (mu - lo));
    if (!hi_inf) return 1.0 / (1.0 + (hi - mu));
    return std::atan(mu) / 3.14159265358979323846 + 0.5;
  }
};

}  // namespace detail

// Adaptive sampling of xi-bar over every domain interval. Tails are followed
// until they leave three times the window, so downstream rasterization sees
// the curve exit any padded frame.
inline DiscriminantCurve sample_curve(const GaleDual& g, const std::vector<int>& eps,
                                      CurveQuality q = {}) {
  require_codim2(g);
  ParamDomain dom = domain_intervals(g, eps);
  if (dom.empty()) throw Error(Errc::EmptyDomain, "the sign-feasible domain is empty");
  CriticalPoints crit = critical_points(g, eps);

  DiscriminantCurve curve;
  curve.cusps = crit.points;

  std::vector<detail::IntervalMap> maps;
  for (const Interval& iv : dom.intervals) {
    detail::IntervalMap m;
    if (iv.lo)
      m.lo = iv.lo->to_double();
    else
      m.lo_inf = true;
    if (iv.hi)
      m.hi = iv.hi->to_double();
    else
      m.hi_inf = true;
    maps.push_back(m);
  }

  // window: cusp images when there are cusps (the features of interest),
  // otherwise mid-interval probes; padded either way
  std::array<double, 4> w;
  if (q.window) {
    w = *q.window;
  } else {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    auto grow = [&](const std::array<double, 2>& p) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) return;
      x0 = std::min(x0, p[0]);
      y0 = std::min(y0, p[1]);
      x1 = std::max(x1, p[0]);
      y1 = std::max(y1, p[1]);
    };
    for (const CriticalPoint& cp : crit.points) grow(cp.image);
    if (x0 > x1)
      for (const auto& m : maps)
        for (double t : {0.3, 0.5, 0.7}) grow(xi_bar(g, m.mu_at(t)));
    if (x0 > x1) {
      x0 = y0 = -1;
      x1 = y1 = 1;
    }
    double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
    double pad = std::max({2.0, (x1 - x0) * 0.75, (y1 - y0) * 0.75});
    double hx = (x1 - x0) / 2 + pad, hy = (y1 - y0) / 2 + pad;
    w = {cx - hx, cy - hy, cx + hx, cy + hy};
  }
  curve.window = w;

  for (size_t ii = 0; ii < maps.size(); ++ii) {
    const auto& m = maps[ii];
    // seed parameters: uniform in t, geometric tails toward both endpoints
    // (the image diverges only logarithmically, so the tails need depth),
    // plus every cusp parameter
    std::vector<double> ts;
    const int kSeed = 257;
    for (int i = 1; i < kSeed; ++i) ts.push_back(static_cast<double>(i) / kSeed);
    for (int j = 9; j <= 110; ++j) {
      double t = std::ldexp(1.0, -j);
      ts.push_back(t);
      ts.push_back(1.0 - t);
    }
    for (const CriticalPoint& cp : crit.points) {
      if (dom.intervals[ii].contains(Rat::from_double(cp.mu))) {
        double t = m.t_at(cp.mu);
        if (t > 0 && t < 1) ts.push_back(t);
      }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    Polyline line;
    line.interval_id = ii;
    auto eval_t = [&](double t) { return xi_bar(g, m.mu_at(t)); };
    auto local_step = [&](double mu) {
      for (const CriticalPoint& cp : crit.points)
        if (std::fabs(mu - cp.mu) < q.cusp_radius) return q.step / q.cusp_factor;
      return q.step;
    };
    auto emit = [&](double t, const std::array<double, 2>& p) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) return;
      line.pts.push_back({m.mu_at(t), p[0], p[1]});
    };
    auto break_line = [&]() {
      if (line.pts.size() >= 2) curve.polylines.push_back(line);
      line.pts.clear();
    };

    std::function<void(double, double, std::array<double, 2>, std::array<double, 2>, int)>
        refine = [&](double t0, double t1, std::array<double, 2> p0, std::array<double, 2> p1,
                     int depth) {
          bool out0 = detail::far_outside(p0, w, 3.0);
          bool out1 = detail::far_outside(p1, w, 3.0);
          if (out0 && out1) {
            if (depth >= 4) {
              // both ends far away: drop the chord, keep the pieces so far
              break_line();
              return;
            }
            // keep subdividing: the curve may dip back into the window
          } else {
            double dx = p1[0] - p0[0], dy = p1[1] - p0[1];
            double need = local_step(m.mu_at((t0 + t1) / 2));
            if (depth >= q.max_depth || (dx * dx + dy * dy <= need * need)) {
              emit(t1, p1);
              return;
            }
          }
          double tm = (t0 + t1) / 2;
          std::array<double, 2> pm = eval_t(tm);
          refine(t0, tm, p0, pm, depth + 1);
          refine(tm, t1, pm, p1, depth + 1);
        };

    size_t first_line = curve.polylines.size();
    std::array<double, 2> prev = eval_t(ts[0]);
    if (!detail::far_outside(prev, w, 3.0)) emit(ts[0], prev);
    for (size_t i = 1; i < ts.size(); ++i) {
      std::array<double, 2> cur = eval_t(ts[i]);
      refine(ts[i - 1], ts[i], prev, cur, 0);
      prev = cur;
    }
    break_line();

    // asymptotic ray extension: the divergence direction at each interval
    // endpoint is the (exact) sum of the B-rows whose linear form vanishes
    // there, so the tail provably leaves any padded frame
    auto tail_dir = [&](bool lo_side) -> std::array<double, 2> {
      const Interval& iv = dom.intervals[ii];
      double dx = 0, dy = 0;
      const std::optional<Rat>& end = lo_side ? iv.lo : iv.hi;
      if (end) {
        QVec v = g.apply_muhat(*end);
        for (size_t i = 0; i < g.m(); ++i)
          if (v[i].is_zero()) {
            dx -= g.b.at(i, 0).to_double();
            dy -= g.b.at(i, 1).to_double();
          }
      } else {
        for (size_t i = 0; i < g.m(); ++i)
          if (!g.b.at(i, 0).is_zero()) {
            dx += g.b.at(i, 0).to_double();
            dy += g.b.at(i, 1).to_double();
          }
      }
      double norm = std::hypot(dx, dy);
      if (norm == 0) return {0, 0};
      return {dx / norm, dy / norm};
    };
    if (curve.polylines.size() > first_line) {
      double reach = 8.0 * std::max(w[2] - w[0], w[3] - w[1]);
      std::array<double, 2> dlo = tail_dir(true), dhi = tail_dir(false);
      if (dlo[0] != 0 || dlo[1] != 0) {
        auto& pts = curve.polylines[first_line].pts;
        CurveSample s0 = pts.front();
        pts.insert(pts.begin(), {s0.mu, s0.x + reach * dlo[0], s0.y + reach * dlo[1]});
      }
      if (dhi[0] != 0 || dhi[1] != 0) {
        auto& pts = curve.polylines.back().pts;
        CurveSample s1 = pts.back();
        pts.push_back({s1.mu, s1.x + reach * dhi[0], s1.y + reach * dhi[1]});
      }
    }
  }
  return curve;
}

// ---- chamber decomposition (grid flood fill) ------------------------------

struct ChamberReport {
  size_t total = 0;
  size_t bounded = 0;
  std::vector<std::array<double, 2>> representatives;  // one interior point per chamber
  std::vector<bool> representative_bounded;
  size_t resolution = 0;
  std::array<double, 4> window{};
};

namespace detail {

struct Grid {
  size_t res;
  std::array<double, 4> w;
  std::vector<uint8_t> wall;

  Grid(size_t r, const std::array<double, 4>& win) : res(r), w(win), wall(r * r, 0) {}

  double cell_w() const { return (w[2] - w[0]) / res; }
  double cell_h() const { return (w[3] - w[1]) / res; }

  void mark_segment(double x0, double y0, double x1, double y1) {
    // Liang-Barsky clip to the window (slightly padded), then a conservative
    // supercover traversal in grid coordinates
    double t0 = 0.0, t1 = 1.0;
    double dx = x1 - x0, dy = y1 - y0;
    double mx = (w[2] - w[0]) * 0.01, my = (w[3] - w[1]) * 0.01;
    const double p[4] = {-dx, dx, -dy, dy};
    const double qq[4] = {x0 - (w[0] - mx), (w[2] + mx) - x0, y0 - (w[1] - my),
                          (w[3] + my) - y0};
    for (int i = 0; i < 4; ++i) {
      if (p[i] == 0) {
        if (qq[i] < 0) return;
        continue;
      }
      double r = qq[i] / p[i];
      if (p[i] < 0) {
        if (r > t1) return;
        if (r > t0) t0 = r;
      } else {
        if (r < t0) return;
        if (r < t1) t1 = r;
      }
    }
    x1 = x0 + t1 * dx;
    y1 = y0 + t1 * dy;
    x0 = x0 + t0 * dx;
    y0 = y0 + t0 * dy;
    // Amanatides-Woo traversal: marks the minimal 4-connected cell chain
    double gx0 = (x0 - w[0]) / cell_w(), gy0 = (y0 - w[1]) / cell_h();
    double gx1 = (x1 - w[0]) / cell_w(), gy1 = (y1 - w[1]) / cell_h();
    long ix = static_cast<long>(std::floor(gx0)), iy = static_cast<long>(std::floor(gy0));
    long jx = static_cast<long>(std::floor(gx1)), jy = static_cast<long>(std::floor(gy1));
    double gdx = gx1 - gx0, gdy = gy1 - gy0;
    int sx = gdx > 0 ? 1 : -1, sy = gdy > 0 ? 1 : -1;
    double tmx = gdx != 0 ? ((sx > 0 ? ix + 1 - gx0 : gx0 - ix) / std::fabs(gdx)) : 2.0;
    double tmy = gdy != 0 ? ((sy > 0 ? iy + 1 - gy0 : gy0 - iy) / std::fabs(gdy)) : 2.0;
    double tdx = gdx != 0 ? 1.0 / std::fabs(gdx) : 2.0;
    double tdy = gdy != 0 ? 1.0 / std::fabs(gdy) : 2.0;
    for (int guard = 0; guard < 8 * static_cast<int>(res); ++guard) {
      mark_cell(ix, iy);
      if (ix == jx && iy == jy) break;
      if (tmx < tmy) {
        tmx += tdx;
        ix += sx;
      } else {
        tmy += tdy;
        iy += sy;
      }
      if (tmx > 2.0 && tmy > 2.0) break;
    }
    mark_cell(jx, jy);
  }

  void mark_cell(long x, long y) {
    if (x >= 0 && y >= 0 && x < static_cast<long>(res) && y < static_cast<long>(res))
      wall[static_cast<size_t>(y) * res + x] = 1;
  }
};

struct FloodResult {
  size_t total = 0, bounded = 0;
  std::vector<std::array<double, 2>> reps;
  std::vector<bool> reps_bounded;
};

// Flood fill of the complement. Components whose every cell sits within two
// cells of the rasterized curve are sub-resolution pockets of the wall band
// (cusp wedges pinch off this way) and are not counted; genuine chambers keep
// a deep interior, which the cross-resolution stability check re-verifies.
inline FloodResult flood(const Grid& grid) {
  size_t res = grid.res;
  std::vector<int32_t> label(res * res, -1);
  size_t ncomp = 0;
  std::vector<uint8_t> touches;
  for (size_t start = 0; start < res * res; ++start) {
    if (grid.wall[start] || label[start] >= 0) continue;
    int32_t id = static_cast<int32_t>(ncomp++);
    touches.push_back(0);
    std::vector<size_t> stack{start};
    label[start] = id;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      size_t x = cur % res, y = cur / res;
      if (x == 0 || y == 0 || x + 1 == res || y + 1 == res) touches[id] = 1;
      const long nbs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
      for (auto& nb : nbs) {
        long nx = static_cast<long>(x) + nb[0], ny = static_cast<long>(y) + nb[1];
        if (nx < 0 || ny < 0 || nx >= static_cast<long>(res) || ny >= static_cast<long>(res))
          continue;
        size_t ni = static_cast<size_t>(ny) * res + nx;
        if (grid.wall[ni] || label[ni] >= 0) continue;
        label[ni] = id;
        stack.push_back(ni);
      }
    }
  }

  // distance transform from the curve cells
  std::vector<int32_t> dist(res * res, -1);
  std::queue<size_t> bfs;
  for (size_t i = 0; i < res * res; ++i)
    if (grid.wall[i]) {
      dist[i] = 0;
      bfs.push(i);
    }
  while (!bfs.empty()) {
    size_t cur = bfs.front();
    bfs.pop();
    size_t x = cur % res, y = cur / res;
    const long nbs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (auto& nb : nbs) {
      long nx = static_cast<long>(x) + nb[0], ny = static_cast<long>(y) + nb[1];
      if (nx < 0 || ny < 0 || nx >= static_cast<long>(res) || ny >= static_cast<long>(res))
        continue;
      size_t ni = static_cast<size_t>(ny) * res + nx;
      if (dist[ni] >= 0) continue;
      dist[ni] = dist[cur] + 1;
      bfs.push(ni);
    }
  }
  std::vector<size_t> best(ncomp, 0);
  std::vector<int32_t> bestd(ncomp, -1);
  std::vector<bool> seen(ncomp, false);
  for (size_t i = 0; i < res * res; ++i) {
    if (grid.wall[i] || label[i] < 0) continue;
    int32_t d = dist[i] < 0 ? std::numeric_limits<int32_t>::max() : dist[i];
    if (!seen[label[i]] || d > bestd[label[i]]) {
      seen[label[i]] = true;
      bestd[label[i]] = d;
      best[label[i]] = i;
    }
  }
  FloodResult out;
  for (size_t c = 0; c < ncomp; ++c) {
    if (bestd[c] <= 2) continue;  // wall-band pocket, not a chamber
    ++out.total;
    if (!touches[c]) ++out.bounded;
    size_t x = best[c] % res, y = best[c] / res;
    out.reps.push_back({grid.w[0] + (x + 0.5) * grid.cell_w(),
                        grid.w[1] + (y + 0.5) * grid.cell_h()});
    out.reps_bounded.push_back(!touches[c]);
  }
  return out;
}

inline FloodResult flood_curve(const DiscriminantCurve& curve, size_t res,
                               const std::array<double, 4>& w) {
  Grid grid(res, w);
  for (const Polyline& pl : curve.polylines)
    for (size_t i = 1; i < pl.pts.size(); ++i)
      grid.mark_segment(pl.pts[i - 1].x, pl.pts[i - 1].y, pl.pts[i].x, pl.pts[i].y);
  return flood(grid);
}

}  // namespace detail

// Counts chambers of the complement of the sampled curve on a padded window.
// Counts must agree at `resolution` and twice that, otherwise the grid is
// declared too coarse.
inline ChamberReport chamber_count(const DiscriminantCurve& curve, size_t resolution = 1024) {
  std::array<double, 4> w = curve.window;
  double cx = (w[0] + w[2]) / 2, cy = (w[1] + w[3]) / 2;
  double hx = (w[2] - w[0]) / 2 * 1.5, hy = (w[3] - w[1]) / 2 * 1.5;
  ChamberReport rep;
  rep.window = {cx - hx, cy - hy, cx + hx, cy + hy};
  rep.resolution = resolution;
  detail::FloodResult lo = detail::flood_curve(curve, resolution, rep.window);
  detail::FloodResult hi = detail::flood_curve(curve, resolution * 2, rep.window);
  if (lo.total != hi.total || lo.bounded != hi.bounded)
    throw Error(Errc::ResolutionTooCoarse,
                "chamber counts unstable across a resolution doubling");
  rep.total = lo.total;
  rep.bounded = lo.bounded;
  rep.representatives = hi.reps;
  rep.representative_bounded = hi.reps_bounded;
  return rep;
}

}  // namespace adisc::discriminant
