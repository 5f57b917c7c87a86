#include "bicons/numerics/monotone_inverse.hpp"

#include <cmath>
#include <sstream>

#include "bicons/numerics/error.hpp"
#include "bicons/numerics/roots.hpp"

namespace bicons::numerics {

MonotoneInverse::MonotoneInverse(std::function<double(double)> f, double lo,
                                 double hi, double f_lo, double f_hi)
    : f_(std::move(f)), lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::InvalidArgument, "monotone_inverse: need lo < hi");
  }
  if (!(f_lo != f_hi) || !std::isfinite(f_lo) || !std::isfinite(f_hi)) {
    throw Error(ErrorCode::InvalidArgument,
                "monotone_inverse: end values must be finite and distinct");
  }
}

MonotoneInverse::MonotoneInverse(std::function<double(double)> f, double lo,
                                 double hi)
    : MonotoneInverse(f, lo, hi, f(lo), f(hi)) {}

double MonotoneInverse::operator()(double y, double tol) const {
  const double a = std::min(f_lo_, f_hi_);
  const double b = std::max(f_lo_, f_hi_);
  if (!(y > a && y < b)) {
    std::ostringstream os;
    os << "monotone_inverse: y=" << y << " outside open image (" << a << ", "
       << b << ")";
    throw Error(ErrorCode::OutOfImage, os.str());
  }
  auto g = [this, y](double x) { return f_(x) - y; };
  return find_root(g, Bracket(lo_, hi_, f_lo_ - y, f_hi_ - y),
                   tol > 0.0 ? tol : 1e-300);
}

}  // namespace bicons::numerics
