// common.hpp -- shared scalar and weight-vector helpers.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieforge {

// Exact rational scalar.  Everything in this library is exact; no floating
// point is used anywhere.  Stored reduced with a positive denominator;
// intermediates go through 128-bit arithmetic, results must fit long long.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(long long n) : num_(n) {}
  Rat(long long n, long long d) { assign(n, d); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  Rat& operator+=(const Rat& o) {
    assign(w(num_) * o.den_ + w(o.num_) * den_, w(den_) * o.den_);
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    assign(w(num_) * o.den_ - w(o.num_) * den_, w(den_) * o.den_);
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    assign(w(num_) * o.num_, w(den_) * o.den_);
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    assign(w(num_) * o.den_, w(den_) * o.num_);
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    w lhs = w(a.num_) * b.den_, rhs = w(b.num_) * a.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

 private:
  using w = __int128;

  void assign(w n, w d) {
    if (d == 0) throw std::domain_error("rational division by zero");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    w a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      w t = a % b;
      a = b;
      b = t;
    }
    if (a != 0) {
      n /= a;
      d /= a;
    } else {
      d = 1;
    }
    constexpr w kMax = 0x7fffffffffffffffLL;
    if (n > kMax || n < -kMax || d > kMax) throw std::overflow_error("rational overflow");
    num_ = (long long)n;
    den_ = (long long)d;
  }

  long long num_ = 0;
  long long den_ = 1;
};

// A weight in fundamental-weight (integral) coordinates, concatenated over
// the simple factors of the acting algebra.
using Weight = std::vector<int>;

inline Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight neg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Weight concat(const Weight& a, const Weight& b) {
  Weight r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline bool is_zero(const Weight& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace lieforge
