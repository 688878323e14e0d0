#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "adisc/bigint.hpp"
#include "adisc/error.hpp"

namespace adisc {

// Exact rational number, always reduced, denominator > 0.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  // Accepts "p", "p/q" and decimal literals ("12.5" -> 25/2), exactly.
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      BigInt n = BigInt::from_string(s.substr(0, slash));
      BigInt d = BigInt::from_string(s.substr(slash + 1));
      if (d.is_zero()) throw Error(Errc::ParseError, "zero denominator: " + s);
      return Rat(std::move(n), std::move(d));
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(BigInt::from_string(s), BigInt(1));
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) throw Error(Errc::ParseError, "trailing dot: " + s);
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head == "+" || head.empty()) head += '0';
    BigInt n = BigInt::from_string(head).abs();
    BigInt d(1);
    for (char ch : frac) {
      if (ch < '0' || ch > '9') throw Error(Errc::ParseError, "invalid decimal: " + s);
      n = n.mul_small(10) + BigInt(ch - '0');
      d = d.mul_small(10);
    }
    if (neg) n = -n;
    return Rat(std::move(n), std::move(d));
  }

  // Exact dyadic value of a finite double.
  static Rat from_double(double x) {
    if (!std::isfinite(x)) throw Error(Errc::InvalidInput, "non-finite double");
    if (x == 0.0) return Rat();
    int exp;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral
    int64_t mant = static_cast<int64_t>(std::ldexp(m, 53));
    exp -= 53;
    BigInt n(mant), d(1);
    BigInt two(2);
    for (int i = 0; i < (exp > 0 ? exp : -exp); ++i) {
      if (exp > 0)
        n = n * two;
      else
        d = d * two;
    }
    return Rat(std::move(n), std::move(d));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw Error(Errc::InvalidInput, "division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  static int cmp(const Rat& a, const Rat& b) {
    return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

  double to_double() const {
    if (num_.is_zero()) return 0.0;
    // handle magnitudes beyond double range via limb-count balancing
    double n = num_.to_double();
    double d = den_.to_double();
    if (std::isfinite(n) && std::isfinite(d) && d != 0.0) return n / d;
    long double ln = 0, ld = 0;  // fall back to log-scale estimate
    BigInt an = num_.abs();
    ln = static_cast<long double>(an.limb_count());
    ld = static_cast<long double>(den_.limb_count());
    double mag = std::pow(10.0, 9.0 * static_cast<double>(ln - ld));
    return (num_.sign() < 0 ? -mag : mag);
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  // integral floor
  BigInt floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (!r.is_zero() && num_.sign() < 0) q = q - BigInt(1);
    return q;
  }

  bool is_integer() const { return den_.is_one(); }

 private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw Error(Errc::InvalidInput, "zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

inline Rat rat_pow(const Rat& base, int e) {
  Rat r(1);
  Rat b = base;
  int k = e < 0 ? -e : e;
  for (int i = 0; i < k; ++i) r *= b;
  return e < 0 ? Rat(1) / r : r;
}

}  // namespace adisc
