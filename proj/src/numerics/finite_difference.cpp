#include "bicons/numerics/finite_difference.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bicons/numerics/error.hpp"

namespace bicons::numerics {

std::vector<double> fornberg_weights(double x0, std::span<const double> nodes,
                                     int order) {
  const int n = static_cast<int>(nodes.size());
  if (order < 0 || n <= order) {
    throw Error(ErrorCode::InvalidArgument,
                "fornberg_weights: need more nodes than the derivative order");
  }
  // c[j][k]: weight of node j for derivative k.
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = c[j][order];
  return w;
}

namespace {

std::vector<double> stencil_offsets(int order, Stencil stencil, int accuracy) {
  std::vector<double> offsets;
  if (stencil == Stencil::Central) {
    const int half = (order + accuracy - 1) / 2;
    for (int j = -half; j <= half; ++j) offsets.push_back(j);
  } else {
    const int count = order + accuracy;
    const double sign = stencil == Stencil::Forward ? 1.0 : -1.0;
    for (int j = 0; j < count; ++j) offsets.push_back(sign * j);
  }
  return offsets;
}

}  // namespace

FdStencil make_stencil(int order, Stencil stencil, int accuracy) {
  if (order < 1 || accuracy < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "make_stencil: order and accuracy must be >= 1");
  }
  auto offsets = stencil_offsets(order, stencil, accuracy);
  auto weights = fornberg_weights(0.0, offsets, order);
  return {std::move(offsets), std::move(weights)};
}

double default_fd_step(int order, double scale, int accuracy) {
  return scale * std::pow(std::numeric_limits<double>::epsilon(),
                          1.0 / (order + accuracy));
}

double fd_derivative_step(const std::function<double(double)>& f, double x,
                          int order, double step, Stencil stencil,
                          int accuracy) {
  if (order < 1 || order > 3) {
    throw Error(ErrorCode::InvalidArgument, "fd_derivative: order must be 1..3");
  }
  if (accuracy < 1) {
    throw Error(ErrorCode::InvalidArgument, "fd_derivative: accuracy must be >= 1");
  }
  if (!(step > 0.0) || !std::isfinite(step) || x + step == x) {
    std::ostringstream os;
    os << "fd_derivative: step " << step << " unusable at x=" << x;
    throw Error(ErrorCode::DomainTooSmall, os.str());
  }
  const auto [offsets, w] = make_stencil(order, stencil, accuracy);
  double sum = 0.0;
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    if (w[j] == 0.0) continue;
    sum += w[j] * f(x + offsets[j] * step);
  }
  return sum / std::pow(step, order);
}

double fd_derivative(const std::function<double(double)>& f, double x,
                     int order, double scale, Stencil stencil, int accuracy) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::DomainTooSmall, "fd_derivative: scale must be > 0");
  }
  return fd_derivative_step(f, x, order, default_fd_step(order, scale, accuracy),
                            stencil, accuracy);
}

}  // namespace bicons::numerics
