#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace bicons::numerics {

/// Truncated Taylor series of order N in one variable: c[k] = f^(k)(x0) / k!.
/// Arithmetic and the elementary functions below propagate all N + 1
/// coefficients exactly (up to roundoff), so derivatives come out without
/// finite differencing.
template <std::size_t N>
class Jet {
 public:
  static constexpr std::size_t order = N;

  constexpr Jet() = default;
  constexpr Jet(double value) { c_[0] = value; }  // NOLINT: implicit constant

  static constexpr Jet variable(double x) {
    Jet j(x);
    if constexpr (N >= 1) j.c_[1] = 1.0;
    return j;
  }

  constexpr double value() const { return c_[0]; }
  constexpr double coeff(std::size_t k) const { return c_[k]; }
  constexpr double& coeff(std::size_t k) { return c_[k]; }

  /// k-th derivative at the expansion point.
  constexpr double derivative(std::size_t k) const {
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return c_[k] * fact;
  }

  /// d/dx as a jet; the top coefficient is lost and set to zero.
  constexpr Jet differentiate() const {
    Jet d;
    for (std::size_t k = 0; k < N; ++k) {
      d.c_[k] = static_cast<double>(k + 1) * c_[k + 1];
    }
    return d;
  }

  constexpr Jet operator-() const {
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) r.c_[k] = -c_[k];
    return r;
  }
  constexpr Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Jet& operator*=(const Jet& o) { return *this = *this * o; }
  constexpr Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend constexpr Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
      r.c_[k] = s;
    }
    return r;
  }
  friend constexpr Jet operator/(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) {
      double s = a.c_[k];
      for (std::size_t i = 1; i <= k; ++i) s -= b.c_[i] * r.c_[k - i];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }

  friend Jet exp(const Jet& a) {
    Jet r;
    r.c_[0] = std::exp(a.c_[0]);
    for (std::size_t k = 1; k <= N; ++k) {
      double s = 0.0;
      for (std::size_t i = 1; i <= k; ++i) s += i * a.c_[i] * r.c_[k - i];
      r.c_[k] = s / k;
    }
    return r;
  }

  friend Jet log(const Jet& a) {
    Jet r;
    r.c_[0] = std::log(a.c_[0]);
    for (std::size_t k = 1; k <= N; ++k) {
      double s = 0.0;
      for (std::size_t i = 1; i < k; ++i) s += i * r.c_[i] * a.c_[k - i];
      r.c_[k] = (a.c_[k] - s / k) / a.c_[0];
    }
    return r;
  }

  friend Jet pow(const Jet& a, double p) {
    Jet r;
    r.c_[0] = std::pow(a.c_[0], p);
    for (std::size_t k = 1; k <= N; ++k) {
      double s = 0.0;
      for (std::size_t i = 1; i <= k; ++i) {
        s += ((p + 1.0) * i - static_cast<double>(k)) * a.c_[i] * r.c_[k - i];
      }
      r.c_[k] = s / (k * a.c_[0]);
    }
    return r;
  }

  friend Jet sqrt(const Jet& a) { return pow(a, 0.5); }

  // sin/cos and sinh/cosh share the coupled recurrences.
  friend Jet sin(const Jet& a) { return trig(a, -1.0).first; }
  friend Jet cos(const Jet& a) { return trig(a, -1.0).second; }
  friend Jet sinh(const Jet& a) { return trig(a, 1.0).first; }
  friend Jet cosh(const Jet& a) { return trig(a, 1.0).second; }
  friend Jet tanh(const Jet& a) {
    const auto [s, c] = trig(a, 1.0);
    return s / c;
  }

 private:
  // sigma = -1: (sin, cos); sigma = +1: (sinh, cosh).
  static std::pair<Jet, Jet> trig(const Jet& a, double sigma) {
    Jet s, c;
    if (sigma < 0.0) {
      s.c_[0] = std::sin(a.c_[0]);
      c.c_[0] = std::cos(a.c_[0]);
    } else {
      s.c_[0] = std::sinh(a.c_[0]);
      c.c_[0] = std::cosh(a.c_[0]);
    }
    for (std::size_t k = 1; k <= N; ++k) {
      double ss = 0.0, cc = 0.0;
      for (std::size_t i = 1; i <= k; ++i) {
        ss += i * a.c_[i] * c.c_[k - i];
        cc += i * a.c_[i] * s.c_[k - i];
      }
      s.c_[k] = ss / k;
      c.c_[k] = sigma * cc / k;
    }
    return {s, c};
  }

  std::array<double, N + 1> c_{};
};

}  // namespace bicons::numerics
