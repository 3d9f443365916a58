#pragma once
// Fubini-Study metric on the (theta, phi, xi) family of evolved states,
// quantum-geometric-tensor normalization:
//   g_ab = Re( <d_a Psi|d_b Psi> - <d_a Psi|Psi><Psi|d_b Psi> ).
// Closed components are xi-independent:
//   g_theta_theta = N/4
//   g_phi_phi     = (N/4) sin^2 theta
//   g_xi_xi       = (1/4) N(N-1) sin^2 theta [ N-1 - (N-3/2) sin^2 theta ]
//   g_phi_xi      = (1/4) N(N-1) cos theta sin^2 theta
//   g_theta_phi   = g_theta_xi = 0
// The cross term carries the full printed line-element coefficient: the
// finite-difference oracle fixes the convention (see fs_metric_numeric).

#include "spingeo/model.hpp"

namespace spingeo {

struct MetricSample {
  double g_theta_theta = 0.0;
  double g_phi_phi = 0.0;
  double g_xi_xi = 0.0;
  double g_phi_xi = 0.0;
  double g_theta_phi = 0.0;
  double g_theta_xi = 0.0;
};

MetricSample fs_metric_closed(const ModelParams& params);

// Central differences of the evolved Dicke amplitudes at (theta, phi, xi),
// one Richardson refinement (step, step/2).  Gauge invariant by construction.
MetricSample fs_metric_numeric(const ModelParams& params, double xi, double step = 1e-4);

}  // namespace spingeo
