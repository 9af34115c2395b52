#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "fqx/error.hpp"

namespace fqx {

// Exact rational number on 64-bit numerator/denominator, always reduced,
// denominator positive. Intermediates widen to 128 bits; a result that no
// longer fits 64 bits throws rather than wrapping.
class Rat {
public:
  constexpr Rat() = default;
  Rat(long long n) : num_(n) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

  Rat pow(int k) const {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  // "a/b" or "a"; the only accepted textual form.
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw Error("malformed rational literal: " + s);
    }
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw Error("rational overflow");
    Rat r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = make(num_, den_); }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace fqx
