#pragma once
// Symmetric-sector (Dicke) representation of N spins prepared in the product
// state [cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>]^(x N) and evolved by
// H = J (sum_i S^z_i)^2.  The state stays in the N+1 dimensional symmetric
// sector; amp[p] is the coefficient of the normalized Dicke state |N, p> with
// p down-spins, whose energy is J (N - 2p)^2 / 4.

#include <complex>
#include <vector>

#include "spingeo/model.hpp"

namespace spingeo {

using cdouble = std::complex<double>;

// Exact integer arithmetic (Pascal row, exact in double) for n <= 50,
// exp(lgamma) beyond.
double binomial(int n, int k);
double log_binomial(int n, int k);

struct DickeState {
  int n = 0;
  std::vector<cdouble> amp;  // size n + 1
  double norm() const;
};

// Energy of |N, p> in units of J: (N - 2p)^2 / 4.
std::vector<double> level_energies(int n);

// |<N,p|Psi(0)>|^2 = C(N,p) cos^(2(N-p))(theta/2) sin^(2p)(theta/2);
// a Binomial(N, sin^2(theta/2)) distribution over p.
std::vector<double> level_weights(const ModelParams& params);

DickeState initial_state(const ModelParams& params);
DickeState evolve(const ModelParams& params, double xi);

// <Psi(0)|Psi(xi)> = sum_p w_p e^{-i xi (N-2p)^2/4}; phi-independent.
cdouble survival_amplitude(const ModelParams& params, double xi);

struct EnergyMoments {
  double mean;      // <H> = J (N/4)(N cos^2 theta + sin^2 theta)
  double variance;  // <H^2> - <H>^2; time-independent
};
EnergyMoments energy_moments(const ModelParams& params);

// Smallest xi > 0 returning the state to itself, probed on multiples of pi/4
// at a generic (theta, phi):
//   amplitude  — componentwise return of the amplitudes,
//   ray        — return of the physical state (|overlap| = 1, global phase free).
// Measured, not asserted: amplitude-wise the period is 2*pi for N even but
// 8*pi for N odd, while the ray period is 2*pi (even) and pi (odd).
struct MeasuredPeriods {
  double amplitude;
  double ray;
};
MeasuredPeriods measured_periods(int n);

// Smallest xi > 0 with arg<Psi(0)|Psi(xi0+xi)> = arg<Psi(0)|Psi(xi0)> mod 2*pi
// at a generic probe point; 2*pi for N even, 8*pi for N odd.
double measured_total_phase_period(int n);

}  // namespace spingeo
