#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "adisc/error.hpp"

namespace adisc {

// Signed arbitrary-precision integer, sign-magnitude with base 10^9 limbs
// (little-endian, no leading zero limbs). Sizes in this library stay small
// (a few dozen limbs at most), so schoolbook arithmetic is enough.
class BigInt {
 public:
  static constexpr uint32_t kBase = 1000000000u;

  BigInt() = default;
  BigInt(int64_t v) {  // NOLINT(google-explicit-constructor)
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    uint64_t m = v > 0 ? static_cast<uint64_t>(v) : 0ull - static_cast<uint64_t>(v);
    while (m > 0) {
      limbs_.push_back(static_cast<uint32_t>(m % kBase));
      m /= kBase;
    }
  }

  static BigInt from_string(const std::string& s) {
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    if (i >= s.size()) throw Error(Errc::ParseError, "empty integer literal");
    BigInt r;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw Error(Errc::ParseError, "invalid digit in integer literal: " + s);
      r = r.mul_small(10);
      r = r + BigInt(s[i] - '0');
    }
    if (sign < 0) r.sign_ = -r.sign_;
    return r;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_abs(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_abs(a.limbs_, b.limbs_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.limbs_ = sub_abs(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
      } else {
        r.limbs_ = sub_abs(b.limbs_, a.limbs_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                       r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
      }
      size_t k = i + b.limbs_.size();
      while (carry > 0) {
        uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  // Truncated quotient and remainder: a = q*b + r with |r| < |b| and
  // sign(r) = sign(a) (or r = 0).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw Error(Errc::InvalidInput, "division by zero");
    if (a.sign_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    int c = cmp_abs(a.limbs_, b.limbs_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_abs(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.trim();
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.limbs_ = std::move(rm);
    r.trim();
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  static int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_abs(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c : -c;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  BigInt mul_small(uint32_t m) const {
    if (sign_ == 0 || m == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.resize(limbs_.size() + 2, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(limbs_[i]) * m + carry;
      r.limbs_[i] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    size_t k = limbs_.size();
    while (carry > 0) {
      r.limbs_[k++] = static_cast<uint32_t>(carry % kBase);
      carry /= kBase;
    }
    r.trim();
    return r;
  }

  bool fits_int64() const {
    if (limbs_.size() > 3) return false;
    // conservative: 3 limbs can reach 1e27 > 2^63; check via accumulate
    long double v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v <= 9.2e18L;
  }

  int64_t to_int64() const {
    int64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return sign_ < 0 ? -v : v;
  }

  double to_double() const {
    double v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return sign_ < 0 ? -v : v;
  }

  // number of base-1e9 limbs; 0 for zero
  size_t limb_count() const { return limbs_.size(); }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%u", limbs_.back());
    s += buf;
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
      std::snprintf(buf, sizeof(buf), "%09u", limbs_[i]);
      s += buf;
    }
    return s;
  }

 private:
  int sign_ = 0;
  std::vector<uint32_t> limbs_;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  static int cmp_abs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_abs(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(x[i]) + (i < y.size() ? y[i] : 0) + carry;
      r[i] = static_cast<uint32_t>(cur % kBase);
      carry = static_cast<uint32_t>(cur / kBase);
    }
    r[x.size()] = carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_abs(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on base-1e9 limbs; requires |a| >= |b| > 0.
  static void divmod_abs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.size() == 1) {
      q.assign(a.size(), 0);
      uint64_t rem = 0;
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = rem * kBase + a[i];
        q[i] = static_cast<uint32_t>(cur / b[0]);
        rem = cur % b[0];
      }
      r.clear();
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    // normalize so the top divisor limb is >= kBase/2
    uint32_t d = static_cast<uint32_t>(kBase / (static_cast<uint64_t>(b.back()) + 1));
    std::vector<uint32_t> u = mul_abs_small(a, d);
    std::vector<uint32_t> v = mul_abs_small(b, d);
    u.push_back(0);
    size_t n = v.size(), m = u.size() - n - 1;
    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t top = static_cast<uint64_t>(u[j + n]) * kBase + u[j + n - 1];
      uint64_t qhat = top / v[n - 1];
      uint64_t rhat = top % v[n - 1];
      while (qhat >= kBase ||
             qhat * v[n - 2] > rhat * kBase + u[j + n - 2]) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= kBase) break;
      }
      // multiply-subtract, may need one add-back
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p / kBase;
        int64_t t = static_cast<int64_t>(u[i + j]) - borrow - static_cast<int64_t>(p % kBase);
        if (t < 0) {
          t += kBase;
          borrow = 1;
        } else {
          borrow = 0;
        }
        u[i + j] = static_cast<uint32_t>(t);
      }
      int64_t t = static_cast<int64_t>(u[j + n]) - borrow - static_cast<int64_t>(carry);
      if (t < 0) {
        t += kBase;
        // add back
        --qhat;
        uint32_t c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<uint32_t>(cur % kBase);
          c2 = static_cast<uint32_t>(cur / kBase);
        }
        t += c2;
        if (t >= kBase) t -= kBase;
      }
      u[j + n] = static_cast<uint32_t>(t);
      q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // remainder = u[0..n) / d
    u.resize(n);
    r.assign(n, 0);
    uint64_t rem = 0;
    for (size_t i = n; i-- > 0;) {
      uint64_t cur = rem * kBase + u[i];
      r[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
  }

  static std::vector<uint32_t> mul_abs_small(const std::vector<uint32_t>& a, uint32_t m) {
    std::vector<uint32_t> r(a.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(a[i]) * m + carry;
      r[i] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    r[a.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

}  // namespace adisc
