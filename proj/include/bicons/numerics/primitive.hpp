#pragma once

#include <functional>
#include <vector>

namespace bicons::numerics {

/// Integrand on (a, b) that may blow up like an inverse square root at either
/// end. It receives x together with its distances to a and to b, so that
/// factors vanishing at the ends can be evaluated without cancellation.
using EndpointIntegrand =
    std::function<double(double x, double from_a, double from_b)>;

/// P(x) = int_base^x g over a fixed interval (a, b) with singular ends.
///
/// A cumulative table on nodes clustered toward both ends keeps every
/// evaluation to one short quadrature: the first and last segments are always
/// integrated from the singular end, interior segments from the nearest node.
/// Requires g > 0, so P is strictly increasing and invertible.
class SingularPrimitive {
 public:
  /// A point of [a, b] carried with its distances to both ends, which stay
  /// accurate below the spacing of doubles near a and b.
  struct Point {
    double x;
    double from_a;
    double from_b;
  };

  SingularPrimitive(EndpointIntegrand g, double a, double b, double base,
                    int segments = 48, double rel_tol = 1e-12);

  /// P(x) for x in [a, b]; the ends return the limits. OutOfDomain otherwise.
  double operator()(double x) const;

  /// P at a located point. Within the end segments the integral runs over
  /// the distance to the end, so P stays resolved where x itself is not.
  double at(const Point& p) const;
  Point point(double x) const;

  /// The integrand itself at an interior x.
  double derivative(double x) const;
  double derivative(const Point& p) const;

  /// x with P(x) = y for y strictly between the limits; OutOfImage otherwise.
  double inverse(double y) const;
  /// As inverse, solving for the distance to the nearer end when y falls in
  /// an end segment. The ends themselves are accepted.
  Point locate(double y) const;

  double a() const noexcept { return nodes_.front(); }
  double b() const noexcept { return nodes_.back(); }
  double base() const noexcept { return base_; }
  double lower_limit() const noexcept { return table_.front(); }
  double upper_limit() const noexcept { return table_.back(); }
  /// Largest quadrature error estimate accumulated into the table.
  double table_error() const noexcept { return table_error_; }

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& values() const noexcept { return table_; }

 private:
  double raw(double x) const;  // int_a^x g, shifted by the table origin
  double from_lower_end(double d) const;  // int_a^{a+d} g
  double from_upper_end(double d) const;  // int_{b-d}^b g

  EndpointIntegrand g_;
  double base_;
  double rel_tol_;
  std::vector<double> nodes_;
  std::vector<double> table_;  // P at the nodes
  double table_error_ = 0.0;
};

}  // namespace bicons::numerics
