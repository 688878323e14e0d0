#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "adisc/rng.hpp"
#include "adisc/support.hpp"

namespace adisc::tropical {

// 2D exact convex hull (monotone chain), returns CCW corner indices.
inline std::vector<size_t> hull_indices(const std::vector<QVec>& pts,
                                        const std::vector<size_t>& subset) {
  std::vector<size_t> idx = subset;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    return pts[a][1] < pts[b][1];
  });
  auto cross = [&](size_t o, size_t a, size_t b) {
    return ((pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
            (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]))
        .sign();
  };
  if (idx.size() <= 2) return idx;
  std::vector<size_t> lo, hi;
  for (size_t i : idx) {
    while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), i) <= 0) lo.pop_back();
    lo.push_back(i);
  }
  for (size_t j = idx.size(); j-- > 0;) {
    size_t i = idx[j];
    while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), i) <= 0) hi.pop_back();
    hi.push_back(i);
  }
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;  // CCW
}

struct RegularSubdivision {
  std::vector<std::vector<size_t>> cells;      // point sets of the upper 2-faces
  std::vector<std::vector<size_t>> cell_hull;  // CCW corners of each cell
  std::vector<std::array<Rat, 2>> cell_dual;   // v_F of each cell
  std::set<std::vector<size_t>> edges;         // point sets of the 1-faces
  std::set<size_t> vertices;                   // 0-faces
  bool generic = false;

  size_t triangle_count() const { return cells.size(); }
};

// Upper faces of the lifted point set by exhaustive supporting-plane checks.
// Non-generic liftings are accepted; cells then carry more than three points.
inline RegularSubdivision regular_subdivision(const SignedSupport& s, const QVec& h) {
  if (s.n != 2) throw Error(Errc::DimensionTooLarge, "subdivisions implemented for n = 2");
  if (h.size() != s.count()) throw Error(Errc::InvalidInput, "lifting length mismatch");
  size_t m = s.count();
  RegularSubdivision out;
  std::set<std::vector<size_t>> seen;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k) {
        // plane z = a x + b y + c through the three lifted points
        QMat sys(3, 3);
        QVec rhs(3);
        size_t tri[3] = {i, j, k};
        for (int r = 0; r < 3; ++r) {
          sys.at(r, 0) = s.points[tri[r]][0];
          sys.at(r, 1) = s.points[tri[r]][1];
          sys.at(r, 2) = Rat(1);
          rhs[r] = h[tri[r]];
        }
        if (det(sys).is_zero()) continue;  // xy-collinear triple
        QVec abc = solve_consistent(sys, rhs);
        std::vector<size_t> on;
        bool upper = true;
        for (size_t p = 0; p < m && upper; ++p) {
          Rat plane = abc[0] * s.points[p][0] + abc[1] * s.points[p][1] + abc[2];
          int c = Rat::cmp(h[p], plane);
          if (c > 0) upper = false;
          if (c == 0) on.push_back(p);
        }
        if (!upper) continue;
        if (!seen.insert(on).second) continue;
        out.cells.push_back(on);
        out.cell_dual.push_back({-abc[0], -abc[1]});
      }
  out.generic = !out.cells.empty();
  for (const auto& cell : out.cells)
    if (cell.size() != 3) out.generic = false;
  for (size_t ci = 0; ci < out.cells.size(); ++ci) {
    std::vector<size_t> corners = hull_indices(s.points, out.cells[ci]);
    out.cell_hull.push_back(corners);
    for (size_t v : corners) out.vertices.insert(v);
    for (size_t e = 0; e < corners.size(); ++e) {
      size_t u = corners[e], v = corners[(e + 1) % corners.size()];
      if (corners.size() == 2 && e == 1) break;  // segment cell: one edge
      // 1-face = all cell points on the closed segment [u, v]
      std::vector<size_t> onseg;
      for (size_t p : out.cells[ci]) {
        Rat cx = (s.points[v][0] - s.points[u][0]) * (s.points[p][1] - s.points[u][1]) -
                 (s.points[v][1] - s.points[u][1]) * (s.points[p][0] - s.points[u][0]);
        if (!cx.is_zero()) continue;
        Rat t = dot(vec_sub(s.points[p], s.points[u]), vec_sub(s.points[v], s.points[u]));
        Rat len = dot(vec_sub(s.points[v], s.points[u]), vec_sub(s.points[v], s.points[u]));
        if (t.sign() >= 0 && t <= len) onseg.push_back(p);
      }
      std::sort(onseg.begin(), onseg.end());
      out.edges.insert(onseg);
    }
  }
  return out;
}

struct TropicalCurve {
  struct Vertex {
    std::array<Rat, 2> pos;
    std::vector<size_t> attain;  // support points of the dual cell
    bool is_signed = false;
  };
  struct Edge {
    size_t a = 0;                 // index into vertices
    std::optional<size_t> b;      // bounded edge endpoint; nullopt for rays
    std::array<Rat, 2> ray_dir{Rat(0), Rat(0)};
    std::array<size_t, 2> attain{0, 0};  // the two support points attaining the max
    bool is_signed = false;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  RegularSubdivision subdivision;

  size_t ray_count() const {
    size_t r = 0;
    for (const Edge& e : edges)
      if (!e.b) ++r;
    return r;
  }
};

// Dual of the 1-skeleton of a generic regular subdivision.
inline TropicalCurve tropical_curve(const SignedSupport& s, const QVec& h) {
  RegularSubdivision sub = regular_subdivision(s, h);
  if (!sub.generic)
    throw Error(Errc::NonGenericLifting, "tropical duality needs a generic lifting");
  TropicalCurve out;
  std::map<std::vector<size_t>, std::vector<size_t>> edge_cells;  // 1-face -> cells
  for (size_t ci = 0; ci < sub.cells.size(); ++ci) {
    TropicalCurve::Vertex v;
    v.pos = sub.cell_dual[ci];
    v.attain = sub.cells[ci];
    bool pos = false, neg = false;
    for (size_t p : v.attain) (s.signs[p] > 0 ? pos : neg) = true;
    v.is_signed = pos && neg;
    out.vertices.push_back(std::move(v));
    const auto& tri = sub.cells[ci];
    for (size_t e = 0; e < 3; ++e) {
      std::vector<size_t> key = {tri[e], tri[(e + 1) % 3]};
      std::sort(key.begin(), key.end());
      edge_cells[key].push_back(ci);
    }
  }
  for (const auto& [key, cells] : edge_cells) {
    TropicalCurve::Edge e;
    e.attain = {key[0], key[1]};
    e.is_signed = s.signs[key[0]] != s.signs[key[1]];
    e.a = cells[0];
    if (cells.size() == 2) {
      e.b = cells[1];
    } else {
      // ray: rotate the dual segment, orient away from the third point
      size_t third = 0;
      for (size_t p : sub.cells[cells[0]])
        if (p != key[0] && p != key[1]) third = p;
      const QVec& pi = s.points[key[0]];
      const QVec& pj = s.points[key[1]];
      const QVec& pk = s.points[third];
      std::array<Rat, 2> d = {-(pj[1] - pi[1]), pj[0] - pi[0]};
      Rat orient = d[0] * (pi[0] - pk[0]) + d[1] * (pi[1] - pk[1]);
      if (orient.sign() < 0) {
        d[0] = -d[0];
        d[1] = -d[1];
      }
      e.ray_dir = d;
    }
    out.edges.push_back(std::move(e));
  }
  out.subdivision = std::move(sub);
  return out;
}

struct SignedCurveReport {
  TropicalCurve curve;
  std::vector<size_t> signed_edges;  // indices into curve.edges
  size_t components = 0;
  size_t bounded_components = 0;
  bool empty() const { return signed_edges.empty(); }
};

// Subcomplex of edges whose attaining pair mixes both sign classes.
inline SignedCurveReport signed_tropical_curve(const SignedSupport& s, const QVec& h) {
  SignedCurveReport rep;
  rep.curve = tropical_curve(s, h);
  std::vector<size_t> parent(rep.curve.vertices.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(parent.size(), false);
  std::map<size_t, bool> has_ray;  // root -> unbounded
  for (size_t ei = 0; ei < rep.curve.edges.size(); ++ei) {
    const auto& e = rep.curve.edges[ei];
    if (!e.is_signed) continue;
    rep.signed_edges.push_back(ei);
    touched[e.a] = true;
    if (e.b) {
      touched[*e.b] = true;
      parent[find(e.a)] = find(*e.b);
    }
  }
  for (size_t ei : rep.signed_edges) {
    const auto& e = rep.curve.edges[ei];
    if (!e.b) has_ray[find(e.a)] = true;
  }
  std::set<size_t> roots;
  for (size_t v = 0; v < parent.size(); ++v)
    if (touched[v]) roots.insert(find(v));
  rep.components = roots.size();
  for (size_t r : roots)
    if (!has_ray.count(r)) ++rep.bounded_components;
  return rep;
}

struct PatchworkReport {
  struct Signature {
    size_t components = 0;
    size_t bounded = 0;
    auto operator<=>(const Signature&) const = default;
  };
  std::map<Signature, size_t> signatures;  // signature -> multiplicity
  size_t sweep = 0;
  uint64_t seed = 0;
  size_t retries = 0;  // non-generic liftings that were re-drawn

  bool any_bounded() const {
    for (const auto& [sig, cnt] : signatures)
      if (sig.bounded > 0) return true;
    return false;
  }
};

inline QVec random_lifting(Rng& rng, size_t m) {
  QVec h(m);
  for (Rat& x : h) x = rng.next_rat_millionth();
  return h;
}

// Random generic liftings plus the two structured ones (last point lifted
// above everything, and its negation). Signatures are (components, bounded)
// pairs of the resulting signed tropical curves.
inline PatchworkReport patchwork_report(const SignedSupport& s, size_t sweep, uint64_t seed) {
  if (s.n != 2) throw Error(Errc::DimensionTooLarge, "patchworking implemented for n = 2");
  PatchworkReport rep;
  rep.sweep = sweep;
  rep.seed = seed;
  Rng rng(seed);
  auto record = [&](const QVec& h) -> bool {
    try {
      SignedCurveReport scr = signed_tropical_curve(s, h);
      ++rep.signatures[{scr.components, scr.bounded_components}];
      return true;
    } catch (const Error& e) {
      if (e.code() != Errc::NonGenericLifting) throw;
      ++rep.retries;
      return false;
    }
  };
  for (size_t i = 0; i < sweep; ++i) {
    for (int tries = 0; tries < 64; ++tries)
      if (record(random_lifting(rng, s.count()))) break;
  }
  for (int sign : {1, -1}) {
    for (int tries = 0; tries < 64; ++tries) {
      QVec h = random_lifting(rng, s.count());
      h.back() = Rat(2);  // strictly above the random [0,1) values
      if (sign < 0)
        for (Rat& x : h) x = -x;
      if (record(h)) break;
    }
  }
  return rep;
}

}  // namespace adisc::tropical
