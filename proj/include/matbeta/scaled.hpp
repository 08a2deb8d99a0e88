#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace matbeta {

// Real number held as mantissa * 2^exp2.  Used wherever products outgrow
// double range (Jack values, branching coefficients, series coefficients).
// Invariant: m == 0 (with e == 0), or 1e-60 <= |m| < 1e60.  The band is
// narrow enough that a product of five mantissas still fits in a double.
struct Scaled {
  double m = 0.0;
  std::int64_t e = 0;

  static constexpr double kHi = 1e60;
  static constexpr double kLo = 1e-60;

  Scaled() = default;
  Scaled(double mant, std::int64_t ex) : m(mant), e(ex) { normalize(); }

  static Scaled from_double(double v) { return Scaled(v, 0); }
  static Scaled zero() { return Scaled(); }
  static Scaled one() { return Scaled(1.0, 0); }

  bool is_zero() const { return m == 0.0; }
  int sign() const { return m > 0.0 ? 1 : (m < 0.0 ? -1 : 0); }

  void normalize() {
    if (m == 0.0) {
      e = 0;
      return;
    }
    double a = std::fabs(m);
    if (a >= kLo && a < kHi) return;
    int k = 0;
    m = std::frexp(m, &k);
    e += k;
  }

  Scaled& operator*=(const Scaled& o) {
    m *= o.m;
    e += o.e;
    normalize();
    return *this;
  }
  Scaled& operator*=(double v) {
    m *= v;
    normalize();
    return *this;
  }
  friend Scaled operator*(Scaled a, const Scaled& b) { return a *= b; }
  friend Scaled operator*(Scaled a, double b) { return a *= b; }

  Scaled& operator/=(const Scaled& o) {
    m /= o.m;
    e -= o.e;
    normalize();
    return *this;
  }
  friend Scaled operator/(Scaled a, const Scaled& b) { return a /= b; }

  Scaled& operator+=(const Scaled& o) {
    if (o.m == 0.0) return *this;
    if (m == 0.0) {
      *this = o;
      return *this;
    }
    std::int64_t d = e - o.e;
    if (d >= 0) {
      if (d < 2100) m += std::ldexp(o.m, static_cast<int>(-d));
    } else {
      if (d > -2100) {
        m = o.m + std::ldexp(m, static_cast<int>(d));
        e = o.e;
      } else {
        *this = o;
      }
    }
    normalize();
    return *this;
  }
  friend Scaled operator+(Scaled a, const Scaled& b) { return a += b; }

  Scaled operator-() const {
    Scaled r = *this;
    r.m = -r.m;
    return r;
  }
  friend Scaled operator-(Scaled a, const Scaled& b) { return a += -b; }

  // Collapses to a plain double; saturates to +-inf or 0 when out of range.
  double to_double() const {
    if (m == 0.0) return 0.0;
    std::int64_t ec = e;
    if (ec > 5000) ec = 5000;
    if (ec < -5000) ec = -5000;
    return std::ldexp(m, static_cast<int>(ec));
  }

  // Natural log of |value|; -inf for zero.
  double log_abs() const {
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(m)) + static_cast<double>(e) * 0.6931471805599453;
  }

  double abs_compare_key() const { return log_abs(); }
};

inline Scaled abs(const Scaled& s) {
  Scaled r = s;
  r.m = std::fabs(r.m);
  return r;
}

// |a| < |b| without collapsing precision.
inline bool abs_less(const Scaled& a, const Scaled& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  return a.log_abs() < b.log_abs();
}

// Sign and natural log of magnitude; the working currency of probability
// assembly where values range far below double underflow.
struct LogSigned {
  int sign = 0;
  double ln = -std::numeric_limits<double>::infinity();

  static LogSigned from_scaled(const Scaled& s) {
    return LogSigned{s.sign(), s.log_abs()};
  }
  double value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(ln);
  }
};

}  // namespace matbeta
