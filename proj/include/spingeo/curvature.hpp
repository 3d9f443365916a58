#pragma once
// Gaussian curvature of the 2D (theta, xi) state manifold at fixed phi:
//   K = (8/N) [ 2 - ((2N-3) cos^2 theta + N) / ((2N-3) cos^2 theta + 1)^2 ].
// Properties: K(theta) = K(pi - theta); K >= 0 everywhere for N = 2;
// K(pi/2) = (8/N)(2 - N) < 0 for N > 2.  The metric degenerates at the poles
// theta in {0, pi} (conical defects), where the closed form is not evaluated.

#include "spingeo/model.hpp"

namespace spingeo {

double gaussian_curvature_closed(const ModelParams& params);

// Same quantity through the Christoffel symbols of the diagonal
// (theta, xi) metric,
//   K = (1/sqrt(g_tt g_xx)) [ d_xi( sqrt(g_xx/g_tt) Gamma^xi_tt )
//                           - d_theta( sqrt(g_xx/g_tt) Gamma^xi_txi ) ],
// with Gamma^xi_tt = -(d_xi g_tt)/(2 g_xx) = 0 and
// Gamma^xi_txi = (d_theta g_xx)/(2 g_xx), derivatives by central differences
// with one Richardson refinement.
double gaussian_curvature_numeric(const ModelParams& params, double step = 1e-4);

}  // namespace spingeo
