#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adisc/matrix.hpp"
#include "adisc/rational.hpp"

namespace adisc {

// Univariate polynomial over Q, coefficients ascending, no trailing zeros.
struct QPoly {
  QVec c;

  QPoly() = default;
  explicit QPoly(QVec coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

  Rat eval(const Rat& x) const {
    Rat r;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }
  double eval(double x) const {
    double r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i].to_double();
    return r;
  }

  QPoly derivative() const {
    if (c.size() <= 1) return QPoly();
    QVec d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Rat(static_cast<int64_t>(i));
    return QPoly(std::move(d));
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QVec r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c.size()) r[i] += a.c[i];
      if (i < b.c.size()) r[i] += b.c[i];
    }
    return QPoly(std::move(r));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    QVec r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c.size()) r[i] += a.c[i];
      if (i < b.c.size()) r[i] -= b.c[i];
    }
    return QPoly(std::move(r));
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QVec r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return QPoly(std::move(r));
  }
  QPoly scaled(const Rat& s) const {
    QVec r = c;
    for (Rat& x : r) x *= s;
    return QPoly(std::move(r));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += c[i].to_string() + "*t^" + std::to_string(i);
    }
    return s;
  }
};

inline void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw Error(Errc::InvalidInput, "polynomial division by zero");
  QVec rem = a.c;
  QVec quo(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1);
  Rat lead = b.c.back();
  while (rem.size() >= b.c.size()) {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (rem.size() < b.c.size()) break;
    Rat f = rem.back() / lead;
    size_t shift = rem.size() - b.c.size();
    quo[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i) rem[shift + i] -= f * b.c[i];
    rem.pop_back();
  }
  q = QPoly(std::move(quo));
  r = QPoly(std::move(rem));
}

inline QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(Rat(1) / a.c.back());  // monic
  return a;
}

// Positive rescale to integer coefficients with gcd 1 (sign pattern kept).
inline QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  BigInt lcm_den(1);
  for (const Rat& x : p.c) {
    if (x.is_zero()) continue;
    BigInt g = BigInt::gcd(lcm_den, x.den());
    lcm_den = (lcm_den / g) * x.den();
  }
  BigInt gcd_num(0);
  for (const Rat& x : p.c) {
    if (x.is_zero()) continue;
    gcd_num = BigInt::gcd(gcd_num, (x.num() * lcm_den) / x.den());
  }
  return p.scaled(Rat(lcm_den, gcd_num));
}

inline QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 1) return p;
  QPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  QPoly q, r;
  poly_divmod(p, g, q, r);
  return q;
}

// Sturm chain with primitive rescaling at each step (keeps coefficients small).
inline std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(primitive_part(p));
  QPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive_part(d));
  while (chain.back().degree() > 0) {
    QPoly q, r;
    poly_divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(primitive_part(r.scaled(Rat(-1))));
  }
  return chain;
}

namespace detail {
inline int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace detail

inline int sturm_variations_at(const std::vector<QPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const QPoly& p : chain) signs.push_back(p.eval(x).sign());
  return detail::count_variations(signs);
}

inline int sturm_variations_at_inf(const std::vector<QPoly>& chain, bool positive) {
  std::vector<int> signs;
  for (const QPoly& p : chain) {
    int s = p.is_zero() ? 0 : p.c.back().sign();
    if (!positive && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return detail::count_variations(signs);
}

// Cauchy bound: all real roots lie in (-M, M).
inline Rat cauchy_root_bound(const QPoly& p) {
  Rat m(0);
  Rat lead = p.c.back().abs();
  for (size_t i = 0; i + 1 < p.c.size(); ++i) {
    Rat v = p.c[i].abs() / lead;
    if (v > m) m = v;
  }
  return m + Rat(1);
}

// Smallest-denominator rational in the closed interval [lo, hi]
// (Stern-Brocot / continued-fraction walk).
inline Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw Error(Errc::InvalidInput, "empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rat(0);
  if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
  // now 0 < lo <= hi
  BigInt fl = lo.floor();
  Rat n(fl, BigInt(1));
  Rat next = n + Rat(1);
  if (lo == n) return n;
  if (next <= hi) return next;
  return n + Rat(1) / simplest_rational_in(Rat(1) / (hi - n), Rat(1) / (lo - n));
}

// Distinct real roots of p, isolated by the Sturm chain of its squarefree
// part and refinable by rational bisection.
class RealRoots {
 public:
  struct Root {
    Rat lo, hi;               // open isolating interval unless exact
    int sign_lo = 0, sign_hi = 0;
    std::optional<Rat> exact;
    double approx() const {
      if (exact) return exact->to_double();
      return (lo.to_double() + hi.to_double()) / 2.0;
    }
  };

  explicit RealRoots(const QPoly& p) {
    if (p.degree() <= 0) return;  // constants (incl. zero poly) have no isolated roots
    sqfree_ = primitive_part(squarefree_part(p));
    chain_ = sturm_chain(sqfree_);
    Rat bound = cauchy_root_bound(sqfree_);
    int total = sturm_variations_at(chain_, -bound) - sturm_variations_at(chain_, bound);
    if (total > 0) isolate(-bound, bound, total);
  }

  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root>& roots() { return roots_; }
  const QPoly& squarefree() const { return sqfree_; }

  // shrink the isolating interval below `width`, recognizing exact rational
  // roots via the simplest-rational probe
  void refine(Root& r, const Rat& width) const {
    if (r.exact) return;
    while (r.hi - r.lo >= width) {
      Rat mid = (r.lo + r.hi) / Rat(2);
      int s = sqfree_.eval(mid).sign();
      if (s == 0) {
        r.exact = mid;
        r.lo = r.hi = mid;
        return;
      }
      if (s == r.sign_lo)
        r.lo = mid;
      else
        r.hi = mid;
    }
    Rat cand = simplest_rational_in(r.lo, r.hi);
    if (sqfree_.eval(cand).sign() == 0) {
      r.exact = cand;
      r.lo = r.hi = cand;
    }
  }

  // -1 if root < e, 0 if root == e, +1 if root > e
  int compare(Root& r, const Rat& e) const {
    if (r.exact) return Rat::cmp(e, *r.exact) == 0 ? 0 : (*r.exact < e ? -1 : 1);
    if (e <= r.lo) return 1;
    if (e >= r.hi) return -1;
    int s = sqfree_.eval(e).sign();
    if (s == 0) {
      r.exact = e;
      r.lo = r.hi = e;
      return 0;
    }
    if (s == r.sign_lo) {
      r.lo = e;  // root in (e, hi)
      return 1;
    }
    r.hi = e;
    return -1;
  }

 private:
  QPoly sqfree_;
  std::vector<QPoly> chain_;
  std::vector<Root> roots_;

  void isolate(const Rat& lo, const Rat& hi, int count) {
    if (count == 0) return;
    if (count == 1) {
      Root r;
      r.lo = lo;
      r.hi = hi;
      r.sign_lo = sqfree_.eval(lo).sign();
      r.sign_hi = sqfree_.eval(hi).sign();
      roots_.push_back(std::move(r));
      return;
    }
    Rat mid = (lo + hi) / Rat(2);
    if (sqfree_.eval(mid).sign() == 0) {
      int left = sturm_variations_at(chain_, lo) - sturm_variations_at(chain_, mid);
      // mid itself is a root; (lo, mid] count includes it
      isolate_with_midroot(lo, mid, hi, left, count);
      return;
    }
    int left = sturm_variations_at(chain_, lo) - sturm_variations_at(chain_, mid);
    isolate(lo, mid, left);
    isolate(mid, hi, count - left);
  }

  void isolate_with_midroot(const Rat& lo, const Rat& mid, const Rat& hi, int left_count,
                            int count) {
    isolate(lo, nudge_below(mid), left_count - 1);
    Root r;
    r.exact = mid;
    r.lo = r.hi = mid;
    roots_.push_back(std::move(r));
    isolate(nudge_above(mid), hi, count - left_count);
  }

  // y < x with exactly one root (x itself) in (y, x]
  Rat nudge_below(const Rat& x) const {
    int vx = sturm_variations_at(chain_, x);
    Rat eps = separation_step();
    for (;;) {
      Rat y = x - eps;
      if (sqfree_.eval(y).sign() != 0 && sturm_variations_at(chain_, y) - vx == 1) return y;
      eps = eps / Rat(2);
    }
  }
  // z > x with no root in (x, z]
  Rat nudge_above(const Rat& x) const {
    int vx = sturm_variations_at(chain_, x);
    Rat eps = separation_step();
    for (;;) {
      Rat z = x + eps;
      if (sqfree_.eval(z).sign() != 0 && vx - sturm_variations_at(chain_, z) == 0) return z;
      eps = eps / Rat(2);
    }
  }
  Rat separation_step() const { return Rat(1, 1024); }
};

}  // namespace adisc
