#include "spingeo/phases.hpp"

#include <algorithm>
#include <cmath>

#include "spingeo/dicke.hpp"

namespace spingeo {

namespace {

constexpr double kZeroOverlap = 1e-13;

double energy_mean_per_j(const ModelParams& params) {
  const double n = params.n;
  const double c2 = std::cos(params.theta) * std::cos(params.theta);
  return 0.25 * n * (n * c2 + (1.0 - c2));
}

}  // namespace

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

double phase_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * kPi));
}

double total_phase(const ModelParams& params, double xi) {
  const cdouble ov = survival_amplitude(params, xi);
  if (std::abs(ov) < kZeroOverlap)
    throw undefined_phase_error("total_phase: survival amplitude vanishes at xi = " +
                                std::to_string(xi));
  return std::arg(ov);
}

PhaseValue total_phase_unwrapped(const ModelParams& params, double xi, int steps) {
  params.validate();
  if (steps < 0) throw std::invalid_argument("total_phase_unwrapped: negative step count");
  if (steps == 0) {
    // Max phase rate is the top level energy N^2/4; keep steps below pi/2.
    const double rate = 0.25 * params.n * params.n;
    steps = std::clamp(static_cast<int>(std::ceil(std::abs(xi) * rate / 1.5)), 64, 4000000);
  }
  PhaseValue out;
  cdouble prev = survival_amplitude(params, 0.0);  // = 1
  double acc = 0.0;
  for (int k = 1; k <= steps; ++k) {
    const cdouble cur = survival_amplitude(params, xi * k / steps);
    if (std::abs(cur) < kZeroOverlap) {
      ++out.zero_crossings;
      continue;  // bridge the node: the next finite sample closes the gap
    }
    acc += std::arg(cur / prev);
    prev = cur;
  }
  out.value = acc;
  return out;
}

double dynamic_phase(const ModelParams& params, double xi) {
  params.validate();
  return -xi * energy_mean_per_j(params);
}

PhaseDecomposition geometric_phase(const ModelParams& params, double xi) {
  const PhaseValue tot = total_phase_unwrapped(params, xi);
  PhaseDecomposition d;
  d.total = tot.value;
  d.dynamic = dynamic_phase(params, xi);
  d.geometric = d.total - d.dynamic;
  d.zero_crossings = tot.zero_crossings;
  return d;
}

double geometric_phase_numeric(const ModelParams& params, double xi, int steps) {
  params.validate();
  if (steps < 2) throw std::invalid_argument("geometric_phase_numeric: steps must be >= 2");
  const auto w = level_weights(params);
  const auto e = level_energies(params.n);
  const double emean = energy_mean_per_j(params);
  auto connection = [&](double s) {
    cdouble ov = 0.0, dov = 0.0;
    for (int p = 0; p <= params.n; ++p) {
      const cdouble ph = std::exp(cdouble(0.0, -s * e[p]));
      ov += w[p] * ph;
      dov += w[p] * cdouble(0.0, -e[p]) * ph;  // exact per-level derivative
    }
    if (std::abs(ov) < kZeroOverlap)
      throw undefined_phase_error("geometric_phase_numeric: overlap zero at s = " +
                                  std::to_string(s));
    return std::imag(dov / ov) + emean;
  };
  const double h = xi / steps;
  double acc = 0.5 * (connection(0.0) + connection(xi));
  for (int k = 1; k < steps; ++k) acc += connection(k * h);
  return acc * h;
}

cdouble short_time_survival(const ModelParams& params, double xi) {
  params.validate();
  const double n = params.n;
  const double c2 = std::cos(params.theta) * std::cos(params.theta);
  const double s2t = std::sin(2.0 * params.theta) * std::sin(2.0 * params.theta);
  const double bracket =
      4.0 * (n - 1.0) * (n + 2.0) * c2 - (n - 3.0) * (n - 2.0) * s2t + 4.0 * (3.0 * n - 2.0);
  const double re = 1.0 + xi * xi * n * (n - 1.0) / 64.0 * bracket;
  const double im = -(xi * n / 4.0) * (n * c2 + (1.0 - c2));
  return {re, im};
}

double short_time_measured_order(const ModelParams& params) {
  const double xi0 = 1e-3;
  const double e1 = std::abs(short_time_survival(params, xi0) - survival_amplitude(params, xi0));
  const double e2 =
      std::abs(short_time_survival(params, 0.5 * xi0) - survival_amplitude(params, 0.5 * xi0));
  return std::log2(e1 / e2);
}

double aa_phase_closed(const ModelParams& params) {
  params.validate();
  if (params.n < 2) throw std::invalid_argument("aa_phase_closed: n must be >= 2");
  const double s2 = std::sin(params.theta) * std::sin(params.theta);
  return -0.5 * kPi * params.n * (params.n - 1.0) * s2;
}

CycleIntegral aa_phase_numeric(const ModelParams& params, int steps) {
  params.validate();
  if (params.n < 2) throw std::invalid_argument("aa_phase_numeric: n must be >= 2");
  if (steps < 16) throw std::invalid_argument("aa_phase_numeric: steps must be >= 16");
  const double t_cycle = 2.0 * kPi;
  // Cyclic premise: xi = 2*pi must return the ray.  Measured, not assumed.
  if (std::abs(std::abs(survival_amplitude(params, t_cycle)) - 1.0) > 1e-10)
    throw computational_error("aa_phase_numeric: xi = 2*pi is not a ray return");
  CycleIntegral out;
  cdouble prev = survival_amplitude(params, 0.0);
  double acc = 0.0;
  for (int k = 1; k <= steps; ++k) {
    const cdouble cur = survival_amplitude(params, t_cycle * k / steps);
    if (std::abs(cur) < kZeroOverlap) {  // node sits on the zero itself
      out.overlap_zeros.push_back(t_cycle * k / steps);
      continue;
    }
    const double jump = std::arg(cur / prev);
    // Smooth phase advance per step is << 1; a near-pi jump marks a
    // transversal zero between nodes (raw value then depends on the jump's
    // sign convention, the mod-2*pi value does not).
    if (std::abs(jump) > 2.0) out.overlap_zeros.push_back(t_cycle * (k - 0.5) / steps);
    acc += jump;
    prev = cur;
  }
  out.value = acc + energy_mean_per_j(params) * t_cycle;
  return out;
}

double topological_phase(int n) {
  if (n < 1) throw std::invalid_argument("topological_phase: n must be >= 1");
  return -0.5 * kPi * n * n;
}

double aa_phase_from_curvature(int n, double k) {
  if (n < 2) throw std::invalid_argument("aa_phase_from_curvature: n must be >= 2");
  const double den = (2.0 * n - 3.0) * (n * k - 16.0);
  if (std::abs(n * k - 16.0) < 1e-12)
    throw coordinate_singularity_error("aa_phase_from_curvature: pole at N K = 16");
  const double num = -56.0 + 3.0 * n * (16.0 - (n - 1.0) * k);
  return (kPi * n * (n - 1.0) / 2.0) * num / den;
}

}  // namespace spingeo
