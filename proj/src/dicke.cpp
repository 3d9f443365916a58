#include "spingeo/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spingeo {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= 50) {
    // Pascal row: every partial sum < 2^53 for n <= 50, so doubles stay exact.
    std::vector<double> row(static_cast<size_t>(n) + 1, 0.0);
    row[0] = 1.0;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    return row[k];
  }
  return std::exp(log_binomial(n, k));
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double DickeState::norm() const {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> level_energies(int n) {
  std::vector<double> e(static_cast<size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) e[p] = 0.25 * (n - 2.0 * p) * (n - 2.0 * p);
  return e;
}

namespace {

// |N,p> amplitude magnitude sqrt(C(N,p)) cos^(N-p)(th/2) sin^p(th/2),
// in log space for large N; the pole branches keep theta in {0, pi} exact.
std::vector<double> amplitude_magnitudes(const ModelParams& params) {
  const int n = params.n;
  const double ch = std::cos(0.5 * params.theta);
  const double sh = std::sin(0.5 * params.theta);
  std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
  if (sh == 0.0) {
    b[0] = std::pow(ch, n);
    return b;
  }
  if (ch == 0.0) {
    b[n] = std::pow(sh, n);
    return b;
  }
  if (n <= 50) {
    for (int p = 0; p <= n; ++p)
      b[p] = std::sqrt(binomial(n, p)) * std::pow(ch, n - p) * std::pow(sh, p);
  } else {
    const double lch = std::log(ch), lsh = std::log(sh);
    for (int p = 0; p <= n; ++p)
      b[p] = std::exp(0.5 * log_binomial(n, p) + (n - p) * lch + p * lsh);
  }
  return b;
}

}  // namespace

std::vector<double> level_weights(const ModelParams& params) {
  params.validate();
  auto b = amplitude_magnitudes(params);
  for (auto& w : b) w *= w;
  return b;
}

DickeState initial_state(const ModelParams& params) {
  params.validate();
  const auto b = amplitude_magnitudes(params);
  DickeState st{params.n, std::vector<cdouble>(static_cast<size_t>(params.n) + 1)};
  for (int p = 0; p <= params.n; ++p)
    st.amp[p] = b[p] * std::exp(cdouble(0.0, p * params.phi));
  return st;
}

DickeState evolve(const ModelParams& params, double xi) {
  DickeState st = initial_state(params);
  const auto e = level_energies(params.n);
  for (int p = 0; p <= params.n; ++p)
    st.amp[p] *= std::exp(cdouble(0.0, -xi * e[p]));
  return st;
}

cdouble survival_amplitude(const ModelParams& params, double xi) {
  const auto w = level_weights(params);
  const auto e = level_energies(params.n);
  cdouble s = 0.0;
  for (int p = 0; p <= params.n; ++p) s += w[p] * std::exp(cdouble(0.0, -xi * e[p]));
  return s;
}

EnergyMoments energy_moments(const ModelParams& params) {
  const auto w = level_weights(params);
  const auto e = level_energies(params.n);
  double m1 = 0.0, m2 = 0.0;
  for (int p = 0; p <= params.n; ++p) {
    m1 += w[p] * e[p];
    m2 += w[p] * e[p] * e[p];
  }
  return {params.j * m1, params.j * params.j * (m2 - m1 * m1)};
}

MeasuredPeriods measured_periods(int n) {
  // Generic probe point: nothing special about these angles beyond avoiding
  // the poles and rational multiples of pi.
  const ModelParams probe{n, 1.03, 0.37, 1.0};
  const double xi0 = 0.583;
  const DickeState base = evolve(probe, xi0);
  MeasuredPeriods out{0.0, 0.0};
  for (int k = 1; k <= 32 && (out.amplitude == 0.0 || out.ray == 0.0); ++k) {
    const double t = k * kPi / 4.0;
    const DickeState shifted = evolve(probe, xi0 + t);
    double max_diff = 0.0;
    cdouble ov = 0.0;
    for (int p = 0; p <= n; ++p) {
      max_diff = std::max(max_diff, std::abs(shifted.amp[p] - base.amp[p]));
      ov += std::conj(base.amp[p]) * shifted.amp[p];
    }
    if (out.amplitude == 0.0 && max_diff < 1e-12) out.amplitude = t;
    if (out.ray == 0.0 && std::abs(1.0 - std::abs(ov)) < 1e-12) out.ray = t;
  }
  if (out.amplitude == 0.0 || out.ray == 0.0)
    throw computational_error("no recurrence found within 8*pi for n = " + std::to_string(n));
  return out;
}

double measured_total_phase_period(int n) {
  const ModelParams probe{n, 1.03, 0.0, 1.0};
  for (int k = 1; k <= 32; ++k) {
    const double t = k * kPi / 4.0;
    bool periodic = true;
    for (double xi0 = 0.21; xi0 < 6.0 && periodic; xi0 += 0.47) {
      const double a0 = std::arg(survival_amplitude(probe, xi0));
      const double a1 = std::arg(survival_amplitude(probe, xi0 + t));
      double d = std::remainder(a1 - a0, 2.0 * kPi);
      if (std::abs(d) > 1e-10) periodic = false;
    }
    if (periodic) return t;
  }
  throw computational_error("no total-phase recurrence within 8*pi for n = " + std::to_string(n));
}

}  // namespace spingeo
