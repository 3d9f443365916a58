#include "spingeo/curvature.hpp"

#include <cmath>

#include "spingeo/metric.hpp"

namespace spingeo {

namespace {

void check_interior(const ModelParams& params, double margin) {
  if (params.n < 2)
    throw std::invalid_argument("curvature needs n >= 2 (single spin has no xi direction)");
  if (params.theta < margin || params.theta > kPi - margin)
    throw singularity_error("curvature is singular at the poles theta in {0, pi}");
}

double g_xi_xi_at(const ModelParams& params, double theta) {
  ModelParams p = params;
  p.theta = theta;
  return fs_metric_closed(p).g_xi_xi;
}

}  // namespace

double gaussian_curvature_closed(const ModelParams& params) {
  params.validate();
  check_interior(params, 1e-12);
  const double n = params.n;
  const double c2 = std::cos(params.theta) * std::cos(params.theta);
  const double x = (2.0 * n - 3.0) * c2 + 1.0;
  return (8.0 / n) * (2.0 - ((2.0 * n - 3.0) * c2 + n) / (x * x));
}

double gaussian_curvature_numeric(const ModelParams& params, double step) {
  params.validate();
  if (!(step > 0.0)) throw std::invalid_argument("gaussian_curvature_numeric: step must be positive");
  check_interior(params, 4.0 * step);
  const double g_tt = 0.25 * params.n;  // theta-theta component, constant
  auto weighted_gamma = [&](double theta, double h) {
    // sqrt(g_xx/g_tt) * Gamma^xi_{theta xi}
    const double gxx = g_xi_xi_at(params, theta);
    const double dgxx = (g_xi_xi_at(params, theta + h) - g_xi_xi_at(params, theta - h)) / (2.0 * h);
    return dgxx / (2.0 * gxx) * std::sqrt(gxx / g_tt);
  };
  auto k_at_step = [&](double h) {
    const double d = (weighted_gamma(params.theta + h, h) - weighted_gamma(params.theta - h, h)) / (2.0 * h);
    return -d / std::sqrt(g_tt * g_xi_xi_at(params, params.theta));
  };
  const double k1 = k_at_step(step);
  const double k2 = k_at_step(0.5 * step);
  return (4.0 * k2 - k1) / 3.0;
}

}  // namespace spingeo
