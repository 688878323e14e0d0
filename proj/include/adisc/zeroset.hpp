#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "adisc/discriminant.hpp"
#include "adisc/support.hpp"

namespace adisc::zeroset {

// Floating-point evaluation context for f_c(x) = sum c_i e^{alpha_i . x}.
struct EvalContext {
  std::vector<std::vector<double>> alphas;
  std::vector<double> coeffs;
  size_t n = 0;

  static EvalContext from(const SignedSupport& s, const std::vector<double>& c) {
    if (c.size() != s.count()) throw Error(Errc::InvalidInput, "coefficient count mismatch");
    for (size_t i = 0; i < c.size(); ++i)
      if ((c[i] > 0 ? 1 : c[i] < 0 ? -1 : 0) != s.signs[i])
        throw Error(Errc::SignMismatch, "sign(c) does not match the sign distribution");
    EvalContext ctx;
    ctx.n = s.n;
    ctx.coeffs = c;
    for (const QVec& p : s.points) {
      std::vector<double> a(s.n);
      for (size_t j = 0; j < s.n; ++j) a[j] = p[j].to_double();
      ctx.alphas.push_back(std::move(a));
    }
    return ctx;
  }
};

struct Evaluation {
  double value = 0;
  std::vector<double> gradient;
  std::vector<std::vector<double>> hessian;
};

// Exponent-shifted evaluation: the largest alpha_i . x is factored out before
// exponentiation, so moderate windows never overflow.
inline Evaluation evaluate(const EvalContext& ctx, const std::vector<double>& x) {
  size_t m = ctx.coeffs.size(), n = ctx.n;
  std::vector<double> dots(m);
  double shift = -1e300;
  for (size_t i = 0; i < m; ++i) {
    double d = 0;
    for (size_t j = 0; j < n; ++j) d += ctx.alphas[i][j] * x[j];
    dots[i] = d;
    shift = std::max(shift, d);
  }
  Evaluation out;
  out.gradient.assign(n, 0.0);
  out.hessian.assign(n, std::vector<double>(n, 0.0));
  double scaled = 0;
  std::vector<double> g(n, 0.0);
  std::vector<std::vector<double>> hs(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < m; ++i) {
    double t = ctx.coeffs[i] * std::exp(dots[i] - shift);
    scaled += t;
    for (size_t j = 0; j < n; ++j) {
      g[j] += t * ctx.alphas[i][j];
      for (size_t k = 0; k < n; ++k) hs[j][k] += t * ctx.alphas[i][j] * ctx.alphas[i][k];
    }
  }
  double rescale = std::exp(shift);
  out.value = scaled * rescale;
  for (size_t j = 0; j < n; ++j) {
    out.gradient[j] = g[j] * rescale;
    for (size_t k = 0; k < n; ++k) out.hessian[j][k] = hs[j][k] * rescale;
  }
  return out;
}

// sign-exact (up to float eval) scaled value e^{-max dot} f(x)
inline double scaled_value(const EvalContext& ctx, const std::vector<double>& x) {
  size_t m = ctx.coeffs.size(), n = ctx.n;
  double shift = -1e300;
  std::vector<double> dots(m);
  for (size_t i = 0; i < m; ++i) {
    double d = 0;
    for (size_t j = 0; j < n; ++j) d += ctx.alphas[i][j] * x[j];
    dots[i] = d;
    shift = std::max(shift, d);
  }
  double s = 0;
  for (size_t i = 0; i < m; ++i) s += ctx.coeffs[i] * std::exp(dots[i] - shift);
  return s;
}

// ---- symmetric eigenvalues (Householder tridiagonalization + QL) ----------

inline std::vector<double> sym_eigenvalues(std::vector<std::vector<double>> a) {
  size_t n = a.size();
  std::vector<double> d(n, 0.0), e(n, 0.0);
  // tridiagonalization
  for (size_t i = n; i-- > 1;) {
    size_t l = i - 1;
    double h = 0, scale = 0;
    if (l > 0) {
      for (size_t k = 0; k <= l; ++k) scale += std::fabs(a[i][k]);
      if (scale == 0.0) {
        e[i] = a[i][l];
      } else {
        for (size_t k = 0; k <= l; ++k) {
          a[i][k] /= scale;
          h += a[i][k] * a[i][k];
        }
        double f = a[i][l];
        double gg = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * gg;
        h -= f * gg;
        a[i][l] = f - gg;
        f = 0;
        for (size_t j = 0; j <= l; ++j) {
          double g2 = 0;
          for (size_t k = 0; k <= j; ++k) g2 += a[j][k] * a[i][k];
          for (size_t k = j + 1; k <= l; ++k) g2 += a[k][j] * a[i][k];
          e[j] = g2 / h;
          f += e[j] * a[i][j];
        }
        double hh = f / (h + h);
        for (size_t j = 0; j <= l; ++j) {
          f = a[i][j];
          e[j] = gg = e[j] - hh * f;
          for (size_t k = 0; k <= j; ++k) a[j][k] -= f * e[k] + gg * a[i][k];
        }
      }
    } else {
      e[i] = a[i][l];
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (size_t i = 0; i < n; ++i) d[i] = a[i][i];
  // QL with implicit shifts
  for (size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < static_cast<int>(n); ++l) {
    int iter = 0;
    int mm;
    do {
      for (mm = l; mm + 1 < static_cast<int>(n); ++mm) {
        double dd = std::fabs(d[mm]) + std::fabs(d[mm + 1]);
        if (std::fabs(e[mm]) <= 1e-300 + 1e-15 * dd) break;
      }
      if (mm != l) {
        if (++iter == 64) break;
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[mm] - d[l] + e[l] / (g + (g >= 0 ? r : -r));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = mm - 1;
        bool early = false;
        for (; i >= l; --i) {
          double f = s * e[i], b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[mm] = 0.0;
            early = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (early && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[mm] = 0.0;
      }
    } while (mm != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

struct SingularZeroReport {
  std::vector<double> location;
  std::vector<double> coefficients;
  double value = 0;
  double gradient_norm = 0;
  std::vector<std::vector<double>> hessian;
  std::vector<double> eigenvalues;  // ascending
  int positive = 0, negative = 0, zero = 0;
};

// Builds c by the Horn-Kapranov map (so x is a singular zero of f_c) and
// reports the Hessian eigenvalue signature there. Zero threshold is
// 1e-8 times the spectral norm.
inline SingularZeroReport hessian_signature_at_constructed_singularity(
    const SignedSupport& s, const GaleDual& g, const QVec& lambda,
    const std::vector<double>& x) {
  SingularZeroReport rep;
  rep.location = x;
  rep.coefficients = discriminant::horn_kapranov(s, g, lambda, x);
  EvalContext ctx = EvalContext::from(s, rep.coefficients);
  Evaluation ev = evaluate(ctx, x);
  rep.value = ev.value;
  double gn = 0;
  for (double v : ev.gradient) gn += v * v;
  rep.gradient_norm = std::sqrt(gn);
  rep.hessian = ev.hessian;
  rep.eigenvalues = sym_eigenvalues(ev.hessian);
  double spectral = 0;
  for (double v : rep.eigenvalues) spectral = std::max(spectral, std::fabs(v));
  double tol = 1e-8 * (spectral > 0 ? spectral : 1.0);
  for (double v : rep.eigenvalues) {
    if (v > tol)
      ++rep.positive;
    else if (v < -tol)
      ++rep.negative;
    else
      ++rep.zero;
  }
  return rep;
}

// ---- marching squares ------------------------------------------------------

struct ZeroSetReport {
  std::vector<std::vector<std::array<double, 2>>> polylines;
  size_t components = 0;
  size_t bounded = 0;
  std::array<double, 4> window{};
  size_t resolution = 0;
};

namespace detail {

struct MsResult {
  size_t components = 0, bounded = 0;
  std::vector<std::vector<std::array<double, 2>>> polylines;
};

inline MsResult marching_squares(const EvalContext& ctx, const std::array<double, 4>& w,
                                 size_t res) {
  size_t nodes = res + 1;
  std::vector<double> val(nodes * nodes);
  double dx = (w[2] - w[0]) / res, dy = (w[3] - w[1]) / res;
  for (size_t iy = 0; iy < nodes; ++iy)
    for (size_t ix = 0; ix < nodes; ++ix)
      val[iy * nodes + ix] = scaled_value(ctx, {w[0] + ix * dx, w[1] + iy * dy});

  // segment endpoints live on grid edges; each edge has at most one crossing
  auto hkey = [&](size_t ix, size_t iy) { return 2 * (iy * nodes + ix); };
  auto vkey = [&](size_t ix, size_t iy) { return 2 * (iy * nodes + ix) + 1; };
  struct Seg {
    size_t e0, e1;
  };
  std::vector<Seg> segs;
  auto interp = [&](double a, double b) {
    double t = a / (a - b);
    if (!std::isfinite(t)) t = 0.5;
    return std::min(1.0, std::max(0.0, t));
  };
  std::map<size_t, std::array<double, 2>> epos;
  for (size_t cy = 0; cy < res; ++cy)
    for (size_t cx = 0; cx < res; ++cx) {
      double v00 = val[cy * nodes + cx], v10 = val[cy * nodes + cx + 1];
      double v01 = val[(cy + 1) * nodes + cx], v11 = val[(cy + 1) * nodes + cx + 1];
      int c = (v00 > 0) | ((v10 > 0) << 1) | ((v11 > 0) << 2) | ((v01 > 0) << 3);
      if (c == 0 || c == 15) continue;
      double x0 = w[0] + cx * dx, y0 = w[1] + cy * dy;
      size_t bottom = hkey(cx, cy), top = hkey(cx, cy + 1);
      size_t left = vkey(cx, cy), right = vkey(cx + 1, cy);
      auto cross = [&](size_t key, double a, double b, int which) {
        if (!epos.count(key)) {
          double t = interp(a, b);
          switch (which) {
            case 0: epos[key] = {x0 + t * dx, y0}; break;          // bottom
            case 1: epos[key] = {x0 + t * dx, y0 + dy}; break;     // top
            case 2: epos[key] = {x0, y0 + t * dy}; break;          // left
            case 3: epos[key] = {x0 + dx, y0 + t * dy}; break;     // right
          }
        }
        return key;
      };
      auto add = [&](size_t ka, size_t kb) { segs.push_back({ka, kb}); };
      auto B = [&] { return cross(bottom, v00, v10, 0); };
      auto T = [&] { return cross(top, v01, v11, 1); };
      auto L = [&] { return cross(left, v00, v01, 2); };
      auto R = [&] { return cross(right, v10, v11, 3); };
      switch (c) {
        case 1: case 14: add(L(), B()); break;
        case 2: case 13: add(B(), R()); break;
        case 3: case 12: add(L(), R()); break;
        case 4: case 11: add(T(), R()); break;
        case 6: case 9: add(B(), T()); break;
        case 7: case 8: add(L(), T()); break;
        case 5: case 10: {
          // saddle: the center value decides which diagonal band connects
          double center = scaled_value(ctx, {x0 + dx / 2, y0 + dy / 2});
          bool main_diag_connected = (c == 5) == (center > 0);
          if (main_diag_connected) {
            // corners 10 and 01 are isolated
            add(B(), R());
            add(L(), T());
          } else {
            // corners 00 and 11 are isolated
            add(L(), B());
            add(T(), R());
          }
          break;
        }
      }
    }

  // components via union-find on edge keys
  std::map<size_t, size_t> comp;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const Seg& s : segs) {
    if (!comp.count(s.e0)) comp[s.e0] = s.e0;
    if (!comp.count(s.e1)) comp[s.e1] = s.e1;
    comp[find(s.e0)] = find(s.e1);
  }
  auto on_border = [&](size_t key) {
    size_t node = key / 2;
    bool horizontal = (key % 2) == 0;
    size_t ix = node % nodes, iy = node / nodes;
    if (horizontal) return iy == 0 || iy == res;
    return ix == 0 || ix == res;
  };
  std::map<size_t, bool> root_border;
  for (const Seg& s : segs) {
    if (on_border(s.e0)) root_border[find(s.e0)] = true;
    if (on_border(s.e1)) root_border[find(s.e1)] = true;
  }
  std::set<size_t> roots;
  for (const Seg& s : segs) roots.insert(find(s.e0));
  MsResult out;
  out.components = roots.size();
  for (size_t r : roots)
    if (!root_border.count(r)) ++out.bounded;

  // chain segments into polylines for output
  std::map<size_t, std::vector<size_t>> adj;  // edge key -> segment ids
  for (size_t i = 0; i < segs.size(); ++i) {
    adj[segs[i].e0].push_back(i);
    adj[segs[i].e1].push_back(i);
  }
  std::vector<bool> used(segs.size(), false);
  auto walk = [&](size_t start_seg, size_t start_node) {
    std::vector<std::array<double, 2>> line;
    size_t node = start_node, seg = start_seg;
    line.push_back(epos[node]);
    for (;;) {
      used[seg] = true;
      node = segs[seg].e0 == node ? segs[seg].e1 : segs[seg].e0;
      line.push_back(epos[node]);
      size_t next = SIZE_MAX;
      for (size_t cnd : adj[node])
        if (!used[cnd]) {
          next = cnd;
          break;
        }
      if (next == SIZE_MAX) break;
      seg = next;
    }
    out.polylines.push_back(std::move(line));
  };
  // open chains start at degree-1 endpoints; the rest are loops
  for (const auto& [node, lst] : adj)
    if (lst.size() == 1 && !used[lst[0]]) walk(lst[0], node);
  for (size_t i = 0; i < segs.size(); ++i)
    if (!used[i]) walk(i, segs[i].e0);
  return out;
}

}  // namespace detail

// Marching squares with a stability gate: component counts must agree at the
// given resolution and at twice it. With no window given, the window grows
// until the counts also stabilize across two consecutive doublings.
inline ZeroSetReport zero_set_2d(const EvalContext& ctx,
                                 std::optional<std::array<double, 4>> window,
                                 size_t resolution = 256) {
  if (ctx.n != 2) throw Error(Errc::DimensionTooLarge, "zero sets implemented for n = 2");
  auto counts_at = [&](const std::array<double, 4>& w, size_t res) {
    return detail::marching_squares(ctx, w, res);
  };
  std::array<double, 4> w;
  if (window) {
    w = *window;
  } else {
    double half = 2.0;
    std::array<size_t, 2> prev{SIZE_MAX, SIZE_MAX};
    std::array<size_t, 2> prev2{SIZE_MAX, SIZE_MAX};
    for (int iter = 0;; ++iter) {
      w = {-half, -half, half, half};
      detail::MsResult r = counts_at(w, resolution);
      std::array<size_t, 2> cur{r.components, r.bounded};
      if (cur == prev && cur == prev2) break;
      if (iter >= 8)
        throw Error(Errc::ResolutionTooCoarse,
                    "component counts never stabilized under window doubling");
      prev2 = prev;
      prev = cur;
      half *= 2;
    }
    // roll back to the first window of the stable run
    half /= 4;
    w = {-half, -half, half, half};
  }
  detail::MsResult fine = counts_at(w, resolution * 2);
  detail::MsResult coarse = counts_at(w, resolution);
  if (fine.components != coarse.components || fine.bounded != coarse.bounded)
    throw Error(Errc::ResolutionTooCoarse,
                "zero-set component counts unstable across a resolution doubling");
  ZeroSetReport rep;
  rep.components = fine.components;
  rep.bounded = fine.bounded;
  rep.polylines = std::move(fine.polylines);
  rep.window = w;
  rep.resolution = resolution;
  return rep;
}

}  // namespace adisc::zeroset
