#include "bicons/numerics/primitive.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bicons/numerics/error.hpp"
#include "bicons/numerics/quadrature.hpp"
#include "bicons/numerics/roots.hpp"

namespace bicons::numerics {

namespace {

QuadratureSpec span(double lo, double hi, bool sl, bool su, double rel) {
  QuadratureSpec s;
  s.lower = lo;
  s.upper = hi;
  s.singular_lower = sl;
  s.singular_upper = su;
  s.rel_tol = rel;
  s.abs_tol = 1e-300;
  return s;
}

}  // namespace

SingularPrimitive::SingularPrimitive(EndpointIntegrand g, double a, double b,
                                     double base, int segments, double rel_tol)
    : g_(std::move(g)), base_(base), rel_tol_(rel_tol) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument, "primitive needs finite a < b");
  }
  if (!(base > a && base < b)) {
    throw Error(ErrorCode::InvalidArgument,
                "primitive base point must lie inside (a, b)");
  }
  if (segments < 3) {
    throw Error(ErrorCode::InvalidArgument, "primitive needs >= 3 segments");
  }
  const int n = segments;
  nodes_.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double c = 0.5 * (1.0 - std::cos(std::numbers::pi * i / n));
    nodes_[i] = a + (b - a) * c;
  }
  nodes_.front() = a;
  nodes_.back() = b;

  table_.assign(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    const double lo = nodes_[i], hi = nodes_[i + 1];
    QuadratureResult r;
    if (i == 0) {
      r = integrate(
          [&](const QuadPoint& p) {
            return g_(p.x, p.from_lower, (b - hi) + p.from_upper);
          },
          span(lo, hi, true, false, rel_tol_));
    } else if (i == n - 1) {
      r = integrate(
          [&](const QuadPoint& p) {
            return g_(p.x, (lo - a) + p.from_lower, p.from_upper);
          },
          span(lo, hi, false, true, rel_tol_));
    } else {
      r = integrate([&](double x) { return g_(x, x - a, b - x); },
                    span(lo, hi, false, false, rel_tol_));
    }
    if (!(r.value > 0.0)) {
      throw Error(ErrorCode::InvalidArgument,
                  "primitive integrand must be positive");
    }
    table_[i + 1] = table_[i] + r.value;
    table_error_ += r.error;
  }
  const double shift = raw(base_);
  for (double& t : table_) t -= shift;
}

double SingularPrimitive::from_lower_end(double d) const {
  const double len = nodes_.back() - nodes_.front();
  const double a = nodes_.front();
  if (d == 0.0) return 0.0;
  return integrate(
             [&](const QuadPoint& p) {
               return g_(a + p.x, p.from_lower, len - p.from_lower);
             },
             span(0.0, d, true, false, rel_tol_))
      .value;
}

double SingularPrimitive::from_upper_end(double d) const {
  const double len = nodes_.back() - nodes_.front();
  const double b = nodes_.back();
  if (d == 0.0) return 0.0;
  return integrate(
             [&](const QuadPoint& p) {
               return g_(b - p.x, len - p.from_lower, p.from_lower);
             },
             span(0.0, d, true, false, rel_tol_))
      .value;
}

double SingularPrimitive::raw(double x) const {
  return at(point(x));
}

SingularPrimitive::Point SingularPrimitive::point(double x) const {
  return {x, x - nodes_.front(), nodes_.back() - x};
}

double SingularPrimitive::at(const Point& p) const {
  const int n = static_cast<int>(nodes_.size()) - 1;
  const double a = nodes_.front(), b = nodes_.back();
  if (p.from_a <= nodes_[1] - a) return table_[0] + from_lower_end(p.from_a);
  if (p.from_b <= b - nodes_[n - 1]) {
    return table_[n] - from_upper_end(p.from_b);
  }
  const double x = p.x;
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const int j = std::clamp(static_cast<int>(it - nodes_.begin()) - 1, 1, n - 2);
  if (x == nodes_[j]) return table_[j];
  if (x == nodes_[j + 1]) return table_[j + 1];
  auto plain = [&](double x0) { return g_(x0, x0 - a, b - x0); };
  if (x - nodes_[j] <= nodes_[j + 1] - x) {
    return table_[j] +
           integrate(plain, span(nodes_[j], x, false, false, rel_tol_)).value;
  }
  return table_[j + 1] -
         integrate(plain, span(x, nodes_[j + 1], false, false, rel_tol_)).value;
}

double SingularPrimitive::operator()(double x) const {
  if (!(x >= a() && x <= b())) {
    std::ostringstream os;
    os << "primitive argument " << x << " outside [" << a() << ", " << b()
       << "]";
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
  if (x == base_) return 0.0;
  return raw(x);
}

double SingularPrimitive::derivative(double x) const {
  if (!(x > a() && x < b())) {
    throw Error(ErrorCode::OutOfDomain, "integrand queried outside (a, b)");
  }
  return g_(x, x - a(), b() - x);
}

double SingularPrimitive::derivative(const Point& p) const {
  if (!(p.from_a > 0.0 && p.from_b > 0.0)) {
    throw Error(ErrorCode::OutOfDomain, "integrand queried outside (a, b)");
  }
  return g_(p.x, p.from_a, p.from_b);
}

double SingularPrimitive::inverse(double y) const {
  if (!(y > table_.front() && y < table_.back())) {
    std::ostringstream os;
    os << "value " << y << " outside the open image (" << table_.front()
       << ", " << table_.back() << ")";
    throw Error(ErrorCode::OutOfImage, os.str());
  }
  return locate(y).x;
}

SingularPrimitive::Point SingularPrimitive::locate(double y) const {
  const int n = static_cast<int>(nodes_.size()) - 1;
  const double a = nodes_.front(), b = nodes_.back(), len = b - a;
  if (!(y >= table_.front() && y <= table_.back())) {
    std::ostringstream os;
    os << "value " << y << " outside the image [" << table_.front() << ", "
       << table_.back() << "]";
    throw Error(ErrorCode::OutOfImage, os.str());
  }
  if (y == table_.front()) return {a, 0.0, len};
  if (y == table_.back()) return {b, len, 0.0};
  if (y == 0.0) return point(base_);
  const auto it = std::upper_bound(table_.begin(), table_.end(), y);
  const int j = std::clamp(static_cast<int>(it - table_.begin()) - 1, 0, n - 1);
  if (y == table_[j]) return point(nodes_[j]);
  if (j == 0) {
    const double w = nodes_[1] - a;
    auto f = [&](double d) { return table_[0] + from_lower_end(d) - y; };
    const double d =
        find_root(f, Bracket(0.0, w, table_[0] - y, table_[1] - y), 1e-300);
    return {a + d, d, len - d};
  }
  if (j == n - 1) {
    const double w = b - nodes_[n - 1];
    auto f = [&](double d) { return table_[n] - from_upper_end(d) - y; };
    const double d = find_root(
        f, Bracket(0.0, w, table_[n] - y, table_[n - 1] - y), 1e-300);
    return {b - d, len - d, d};
  }
  const double lo = nodes_[j], hi = nodes_[j + 1];
  auto f = [&](double x) { return raw(x) - y; };
  const double x =
      find_root(f, Bracket(lo, hi, table_[j] - y, table_[j + 1] - y), 1e-300);
  return point(x);
}

}  // namespace bicons::numerics
