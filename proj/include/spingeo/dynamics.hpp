#pragma once
// Evolution speed, Fubini-Study path length, and the time-optimal (quantum
// brachistochrone) point of the xi-circle:
//   V(theta)   = (J/2) sqrt( N(N-1) sin^2 theta [N-1 - (N-3/2) sin^2 theta] )
//              = sqrt(<H^2> - <H>^2)            (time-independent)
//   sin^2 theta_max = (N-1)/(2N-3),  V_max = J (N-1) sqrt( N(N-1) / (8(2N-3)) )
//   S(xi)      = (xi/J) V,   S_min = (xi/2) sqrt(N(N-1)/2)  at theta = pi/2
//   t_min/t    = sqrt(2N-3)/(N-1)  — 1 at N = 2, strictly decreasing in N.

#include "spingeo/model.hpp"

namespace spingeo {

double speed_closed(const ModelParams& params);

// sqrt of the Hamiltonian variance: full-basis oracle for n <= 14, symmetric
// sector beyond.  Equals speed_closed identically — the printed metric is the
// quantum-geometric-tensor normalization, under which speed is one energy
// uncertainty (the doubled-speed convention belongs to a metric 4x larger;
// the verify report documents the factor).
double speed_from_energy(const ModelParams& params);

// S = xi * V / J; path length accumulated up to dimensionless time xi.
double fs_distance(const ModelParams& params, double xi);

// Golden-section argmax of V over theta in (0, pi/2]; V is symmetric about
// pi/2 so the left representative is reported (matches asin form).
double argmax_speed_theta(int n, double j = 1.0);

struct Brachistochrone {
  double theta_max;
  double v_max;
  double s_min_per_xi;   // S_min / xi = (1/2) sqrt(N(N-1)/2)
  double t_min_over_t;   // sqrt(2N-3)/(N-1)
};
Brachistochrone brachistochrone(int n, double j = 1.0);

}  // namespace spingeo
