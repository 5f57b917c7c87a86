#pragma once

#include <functional>
#include <span>
#include <vector>

namespace bicons::numerics {

enum class Stencil { Central, Forward, Backward };

/// Fornberg weights: w[j] such that f^(order)(x0) ~ sum_j w[j] f(nodes[j]).
std::vector<double> fornberg_weights(double x0, std::span<const double> nodes,
                                     int order);

/// Offsets (in units of the step) and weights of a derivative stencil.
struct FdStencil {
  std::vector<double> offsets;
  std::vector<double> weights;
};

FdStencil make_stencil(int order, Stencil stencil = Stencil::Central,
                       int accuracy = 4);

/// Finite-difference derivative of the given order (1..3) with an explicit
/// step. Central stencils are symmetric with `accuracy` (even) order;
/// one-sided stencils use order + accuracy nodes on one side of x
/// (including x itself).
double fd_derivative_step(const std::function<double(double)>& f, double x,
                          int order, double step,
                          Stencil stencil = Stencil::Central,
                          int accuracy = 4);

/// As fd_derivative_step with the step picked from the order and the
/// characteristic length `scale` of f near x: step = scale * eps^(1/(order+accuracy)).
double fd_derivative(const std::function<double(double)>& f, double x,
                     int order, double scale,
                     Stencil stencil = Stencil::Central, int accuracy = 4);

double default_fd_step(int order, double scale, int accuracy = 4);

}  // namespace bicons::numerics
