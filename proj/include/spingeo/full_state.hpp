#pragma once
// Full 2^N Hilbert-space oracle.  Basis index: bit (n-1-i) holds spin i+1, so
// spin 1 is the most significant bit; up = 0, down = 1.  A configuration with
// p down-spins has magnetization m = (N - 2p)/2 and energy J m^2.  Kept
// independent of the Dicke path on purpose: it cross-checks the symmetric
// sector rather than reusing it.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "spingeo/dicke.hpp"
#include "spingeo/model.hpp"

namespace spingeo {

inline constexpr int kMaxOracleSpins = 14;

struct FullState {
  int n = 0;
  std::vector<cdouble> amp;  // size 2^n
  double norm() const;
};

// Spread each |N,p> amplitude uniformly over its C(N,p) configurations.
FullState dicke_to_full(const DickeState& state);

FullState full_initial_state(const ModelParams& params);

// Product state evolved configuration-by-configuration: factor e^{-i xi m^2}.
FullState full_evolve_oracle(const ModelParams& params, double xi);

cdouble full_survival_oracle(const ModelParams& params, double xi);
EnergyMoments full_energy_moments_oracle(const ModelParams& params);

// |<a|b>|; states must share n.
double fidelity(const FullState& a, const FullState& b);

// Partial trace onto spins (a, b), 1-based; basis |s_a s_b> with up = 0.
Eigen::Matrix4cd reduced_two_spin_density(const FullState& state, int spin_a, int spin_b);

// Energy levels J m^2 with m = (N-2p)/2 and their degeneracies C(N,p).
struct SpectrumLine {
  double energy;
  double magnetization;
  double degeneracy;
};
std::vector<SpectrumLine> hamiltonian_spectrum(int n, double j);

}  // namespace spingeo
