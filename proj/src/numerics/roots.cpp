#include "bicons/numerics/roots.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <sstream>

namespace bicons::numerics {

Bracket::Bracket(double lo, double hi, double f_lo, double f_hi)
    : lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    std::ostringstream os;
    os << "bracket requires finite lo < hi, got [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::NoSignChange, os.str());
  }
  if (!(f_lo * f_hi < 0.0)) {
    std::ostringstream os;
    os << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << f_lo
       << " f(hi)=" << f_hi;
    throw Error(ErrorCode::NoSignChange, os.str());
  }
}

RootResult find_root_bracketed(const std::function<double(double)>& f,
                               const Bracket& b, double tol,
                               int max_iterations) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "find_root: tol must be positive");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto done = [tol](double a, double c) {
    const double scale = std::max(std::abs(a), std::abs(c));
    return std::abs(c - a) <= std::max(tol, 4.0 * eps * scale);
  };
  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iterations);
  std::pair<double, double> r;
  try {
    r = boost::math::tools::toms748_solve(f, b.lo(), b.hi(), b.f_lo(),
                                          b.f_hi(), done, iters);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::MaxIterations,
                std::string("find_root: solver failure: ") + e.what());
  }
  if (!done(r.first, r.second)) {
    std::ostringstream os;
    os << "find_root: not converged after " << max_iterations
       << " iterations, bracket [" << r.first << ", " << r.second << "]";
    throw Error(ErrorCode::MaxIterations, os.str());
  }
  return {0.5 * (r.first + r.second), r.first, r.second,
          static_cast<int>(iters)};
}

Bracket expand_upward(const std::function<double(double)>& f, double lo,
                      double hi, double factor, int max_growth) {
  const double f_lo = f(lo);
  double f_hi = f(hi);
  for (int i = 0; i < max_growth && f_lo * f_hi > 0.0; ++i) {
    hi = lo + factor * (hi - lo);
    f_hi = f(hi);
  }
  return Bracket(lo, hi, f_lo, f_hi);
}

}  // namespace bicons::numerics
