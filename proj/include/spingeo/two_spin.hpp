#pragma once
// Two spins (N = 2) with the state manifold re-parameterized by entanglement.
// Evolved product state in the computational basis ( |uu>, |ud>, |du>, |dd> ):
//   a = e^{-i xi} cos^2(theta/2),  b = c = (1/2) e^{i phi} sin theta,
//   d = e^{i(2 phi - xi)} sin^2(theta/2)
// Wootters concurrence C = sin^2 theta |sin xi|; reduced coordinate
// C_r = C/|sin xi| = sin^2 theta.  Every (theta, xi) quantity of the general
// modules has a (C, xi) twin here; the twins are checked to agree under
// sin^2 theta = C/|sin xi|.

#include <Eigen/Dense>
#include <complex>

#include "spingeo/model.hpp"

namespace spingeo {

struct TwoSpinAmplitudes {
  std::complex<double> a, b, c, d;
};

TwoSpinAmplitudes two_spin_state(double theta, double phi, double xi);

// Wootters concurrence of a two-qubit density matrix: max(0, l1-l2-l3-l4)
// where l_i are the square roots of the eigenvalues of rho*rho~ with
// rho~ = (sy x sy) rho* (sy x sy).  Computed as the singular values of
// sqrt(rho~) sqrt(rho): identical spectrum, but no square root of noisy
// near-zero eigenvalues (keeps the pure-state error at machine precision).
// Eigenvalues of rho below -1e-12 raise; the interval [-1e-12, 0) is clipped.
double wootters_concurrence(const Eigen::Matrix4cd& rho);

double concurrence_closed(double theta, double xi);  // sin^2 theta |sin xi|
double reduced_concurrence(double theta, double xi); // C / |sin xi|

// Printed line element in (C, xi), evaluated as a quadratic form on (dC, dxi):
//   dS^2 = dC^2 / (8 C (|sin xi| - C))
//        - dC dxi cos(xi) / (4 sin(xi) (|sin xi| - C))
//        + (C/4) [ cos^2(xi) / (2 sin^2(xi)(|sin xi| - C)) + (2|sin xi| - C)/sin^2 xi ] dxi^2
double ds2_concurrence(double c, double xi, double dc, double dxi);

// Same geometry in the time-normalized coordinate C_r = C/|sin xi|:
//   dS^2 = dC_r^2 / (8 C_r (1 - C_r)) + (1/4) C_r (2 - C_r) dxi^2  (diagonal)
double ds2_reduced(double c_r, double xi_unused, double dc_r, double dxi);

// K(C) = 4 [ 2 + |sin xi| (C - 3|sin xi|) / (C - 2|sin xi|)^2 ];
// K(0) = 5, K(|sin xi|) = 0, and the xi -> 0 limit at fixed C is 8.
double curvature_of_concurrence(double c, double xi);

// K(C) < 0, written as the printed inequality
//   |sin xi| (C - 3 |sin xi|) < -2 (C - 2 |sin xi|)^2.
bool negativity_condition(double c, double xi);

// Phi_g(C) = -arg[ (2|sin xi| - C) e^{i xi} + C ]* ... evaluated atan2-wise:
//   -atan2( (2S - C) sin xi, (2S - C) cos xi + C ) + xi (1 - C/(2S)),  S = |sin xi|.
double geometric_phase_of_concurrence(double c, double xi);

// Stationary concurrence of Phi_g(C):
//   C_c = sin xi - cot(xi/2) sqrt( (sin xi / xi)(2 - xi sin xi - 2 cos xi) ).
double critical_concurrence(double xi);
// Golden-section argmin of the printed Phi_g(C) on (0, |sin xi|).
double critical_concurrence_numeric(double xi);

double aa_phase_of_concurrence(double c, double xi);  // -pi C / |sin xi|

double speed_of_concurrence(double c, double xi, double j = 1.0);
double distance_of_concurrence(double c, double xi);            // S = (xi/J) V, J-free
double optimal_time_of_concurrence(double c, double xi, double j = 1.0);  // tau = S / V_max

// Metric coefficient on the optimal-state circle: (C/(4 sin^2 xi))(2|sin xi| - C)
// = (V/J)^2.
double optimal_metric_coefficient(double c, double xi);

}  // namespace spingeo
