#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jrdeg {

// Exact rational on int64 with __int128 intermediates. Every result is
// normalized (den > 0, gcd 1); anything that would leave int64 after
// reduction throws instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit on purpose
  Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    norm_assign(n, d);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational& operator+=(const Rational& o) {
    __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    return norm_assign128(n, i128(den_) * o.den_);
  }
  Rational& operator-=(const Rational& o) {
    __int128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
    return norm_assign128(n, i128(den_) * o.den_);
  }
  Rational& operator*=(const Rational& o) {
    return norm_assign128(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return norm_assign128(i128(num_) * o.den_, i128(den_) * o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p" or "p/q", optional leading minus on p.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        long long n = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing junk");
        return Rational(n);
      }
      long long n = std::stoll(s.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("trailing junk");
      long long d = std::stoll(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1) throw std::invalid_argument("trailing junk");
      return Rational(n, d);
    } catch (const std::domain_error&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
  }

 private:
  long long num_ = 0;
  long long den_ = 1;

  static __int128 i128(long long x) { return static_cast<__int128>(x); }

  void norm_assign(long long n, long long d) { norm_assign128(i128(n), i128(d)); }

  Rational& norm_assign128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational: overflow");
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
    return *this;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
};

}  // namespace jrdeg
