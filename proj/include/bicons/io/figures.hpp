#pragma once

#include "bicons/gluing/atlas.hpp"
#include "bicons/io/table.hpp"

namespace bicons::io {

/// n points of [a, b] clustered toward both ends, ends included.
std::vector<double> clustered_samples(double a, double b, int n);

/// Profile curve of X_C: columns u, x, z over u in [-u_max, u_max].
Table figure_profile(double C, double u_max, int n);

/// h0 over [xi01, xi02]: columns xi, h0.
Table figure_h0(const gluing::GluingAtlas& atlas, int n);

/// h0 with its two reflections h1 = 2 h_{0,1} - h0 and
/// h_{-1} = 2 h_{0,-1} - h0: columns xi, h0, h1, hm1.
Table figure_h_branches(const gluing::GluingAtlas& atlas, int n);

/// Profile curves sigma_k = (C*/xi, h_k): columns xi, x, h0 (and h1, hm1).
Table figure_sigma0(const gluing::GluingAtlas& atlas, int n);
Table figure_sigma_branches(const gluing::GluingAtlas& atlas, int n);

/// First two components of the complete immersion over [h_{0,-k}, h_{0,k}]:
/// columns h, x1, x2.
Table figure_projection(const gluing::GluingAtlas& atlas, int k, int n);

}  // namespace bicons::io
