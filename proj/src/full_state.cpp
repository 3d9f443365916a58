#include "spingeo/full_state.hpp"

#include <bit>
#include <cmath>

namespace spingeo {

namespace {

void check_oracle_size(int n) {
  if (n < 1 || n > kMaxOracleSpins)
    throw std::length_error("full-basis oracle supports 1 <= n <= " +
                            std::to_string(kMaxOracleSpins) + ", got " + std::to_string(n));
}

}  // namespace

double FullState::norm() const {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

FullState dicke_to_full(const DickeState& state) {
  check_oracle_size(state.n);
  const size_t dim = size_t{1} << state.n;
  FullState full{state.n, std::vector<cdouble>(dim)};
  std::vector<double> inv_sqrt_deg(static_cast<size_t>(state.n) + 1);
  for (int p = 0; p <= state.n; ++p) inv_sqrt_deg[p] = 1.0 / std::sqrt(binomial(state.n, p));
  for (size_t idx = 0; idx < dim; ++idx) {
    const int p = std::popcount(idx);
    full.amp[idx] = state.amp[p] * inv_sqrt_deg[p];
  }
  return full;
}

FullState full_initial_state(const ModelParams& params) {
  return full_evolve_oracle(params, 0.0);
}

FullState full_evolve_oracle(const ModelParams& params, double xi) {
  params.validate();
  check_oracle_size(params.n);
  const int n = params.n;
  const double ch = std::cos(0.5 * params.theta);
  const double sh = std::sin(0.5 * params.theta);
  const cdouble down = sh * std::exp(cdouble(0.0, params.phi));
  const size_t dim = size_t{1} << n;
  FullState full{n, std::vector<cdouble>(dim)};
  for (size_t idx = 0; idx < dim; ++idx) {
    const int p = std::popcount(idx);
    const double m = 0.5 * (n - 2.0 * p);
    full.amp[idx] = std::pow(ch, n - p) * std::pow(down, p) * std::exp(cdouble(0.0, -xi * m * m));
  }
  return full;
}

cdouble full_survival_oracle(const ModelParams& params, double xi) {
  const FullState a = full_initial_state(params);
  const FullState b = full_evolve_oracle(params, xi);
  cdouble s = 0.0;
  for (size_t i = 0; i < a.amp.size(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

EnergyMoments full_energy_moments_oracle(const ModelParams& params) {
  const FullState psi = full_initial_state(params);
  const int n = params.n;
  double m1 = 0.0, m2 = 0.0;
  for (size_t idx = 0; idx < psi.amp.size(); ++idx) {
    const int p = std::popcount(idx);
    const double m = 0.5 * (n - 2.0 * p);
    const double e = params.j * m * m;
    const double w = std::norm(psi.amp[idx]);
    m1 += w * e;
    m2 += w * e * e;
  }
  return {m1, m2 - m1 * m1};
}

double fidelity(const FullState& a, const FullState& b) {
  if (a.n != b.n) throw std::invalid_argument("fidelity: states of different size");
  cdouble s = 0.0;
  for (size_t i = 0; i < a.amp.size(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return std::abs(s);
}

Eigen::Matrix4cd reduced_two_spin_density(const FullState& state, int spin_a, int spin_b) {
  const int n = state.n;
  if (spin_a < 1 || spin_a > n || spin_b < 1 || spin_b > n || spin_a == spin_b)
    throw std::invalid_argument("reduced_two_spin_density: invalid spin pair");
  const int bit_a = n - spin_a;  // spin 1 = most significant bit
  const int bit_b = n - spin_b;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const size_t dim = state.amp.size();
  for (size_t idx = 0; idx < dim; ++idx) {
    const int sa = static_cast<int>((idx >> bit_a) & 1u);
    const int sb = static_cast<int>((idx >> bit_b) & 1u);
    const int row = 2 * sa + sb;
    // Partner index with the pair (sa', sb') substituted; environment bits equal.
    for (int row2 = 0; row2 < 4; ++row2) {
      const size_t idx2 = (idx & ~((size_t{1} << bit_a) | (size_t{1} << bit_b))) |
                          (static_cast<size_t>((row2 >> 1) & 1) << bit_a) |
                          (static_cast<size_t>(row2 & 1) << bit_b);
      rho(row, row2) += state.amp[idx] * std::conj(state.amp[idx2]);
    }
  }
  return rho;
}

std::vector<SpectrumLine> hamiltonian_spectrum(int n, double j) {
  if (n < 1) throw std::invalid_argument("hamiltonian_spectrum: n must be >= 1");
  std::vector<SpectrumLine> lines;
  lines.reserve(static_cast<size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) {
    const double m = 0.5 * (n - 2.0 * p);
    lines.push_back({j * m * m, m, binomial(n, p)});
  }
  return lines;
}

}  // namespace spingeo
