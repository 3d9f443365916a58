#pragma once
// Gauss-Bonnet bookkeeping on the closed (theta, xi) manifold, xi-period 2*pi:
//   bulk    = int_0^pi int_0^{2pi} K sqrt(g_tt g_xx) dtheta dxi = 4*pi*(N-1)
//   defects = two cones at theta in {0, pi}, each 2*pi*(1 - r0) with
//             r0 = lim_{theta->0} sqrt(g_xx)/(sqrt(g_tt) theta) = N - 1,
//             total 4*pi*(2-N)
//   chi     = (bulk + defects)/(2*pi) = 2  — spherical topology for every N.
// The defect limit is measured (Richardson in theta^2), never hard-coded.

#include "spingeo/model.hpp"

namespace spingeo {

struct GaussBonnetReport {
  double bulk;                // curvature integral over the smooth interior
  double defect;              // total conical defect angle
  double defect_limit_ratio;  // measured r0, expected N-1
  double euler_characteristic;
};

// Adaptive Simpson in theta on [eps, pi-eps]; the integrand is xi-independent
// so the xi integral is the exact factor 2*pi.
double gauss_bonnet_bulk(int n, double tol = 1e-8, double eps = 1e-6);

// Measured small-angle limit of sqrt(g_xx)/(sqrt(g_tt) theta).
double defect_limit_ratio(int n);

double angular_defect(int n);

GaussBonnetReport gauss_bonnet(int n);

}  // namespace spingeo
