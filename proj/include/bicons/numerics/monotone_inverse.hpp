#pragma once

#include <functional>

namespace bicons::numerics {

/// Inverse of a strictly monotone f on (lo, hi). The end values f_lo, f_hi
/// are the limits of f at the ends; they are stored so repeated queries do not
/// re-evaluate f at possibly singular endpoints.
class MonotoneInverse {
 public:
  MonotoneInverse(std::function<double(double)> f, double lo, double hi,
                  double f_lo, double f_hi);

  /// Evaluates f at lo and hi.
  MonotoneInverse(std::function<double(double)> f, double lo, double hi);

  /// x in (lo, hi) with f(x) = y; throws OutOfImage unless y lies strictly
  /// between f_lo and f_hi. `tol` bounds the final bracket width in x.
  double operator()(double y, double tol = 0.0) const;

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double f_lo() const noexcept { return f_lo_; }
  double f_hi() const noexcept { return f_hi_; }
  bool increasing() const noexcept { return f_hi_ > f_lo_; }

 private:
  std::function<double(double)> f_;
  double lo_, hi_, f_lo_, f_hi_;
};

inline double monotone_inverse(std::function<double(double)> f, double lo,
                               double hi, double y, double tol = 0.0) {
  return MonotoneInverse(std::move(f), lo, hi)(y, tol);
}

}  // namespace bicons::numerics
