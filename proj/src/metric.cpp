#include "spingeo/metric.hpp"

#include <array>
#include <cmath>

#include "spingeo/dicke.hpp"

namespace spingeo {

MetricSample fs_metric_closed(const ModelParams& params) {
  params.validate();
  const double n = params.n;
  const double s2 = std::sin(params.theta) * std::sin(params.theta);
  const double c = std::cos(params.theta);
  MetricSample g;
  g.g_theta_theta = 0.25 * n;
  g.g_phi_phi = 0.25 * n * s2;
  g.g_xi_xi = 0.25 * n * (n - 1.0) * s2 * (n - 1.0 - (n - 1.5) * s2);
  g.g_phi_xi = 0.25 * n * (n - 1.0) * c * s2;
  return g;
}

namespace {

std::vector<cdouble> state_at(const ModelParams& base, double theta, double phi, double xi) {
  ModelParams p = base;
  p.theta = theta;
  p.phi = phi;
  return evolve(p, xi).amp;
}

cdouble dot(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  cdouble s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

MetricSample metric_from_differences(const ModelParams& params, double xi, double h) {
  const double th = params.theta, ph = params.phi;
  const std::vector<cdouble> psi = state_at(params, th, ph, xi);
  std::array<std::vector<cdouble>, 3> d;
  auto central = [&](std::vector<cdouble> plus, const std::vector<cdouble>& minus) {
    for (size_t i = 0; i < plus.size(); ++i) plus[i] = (plus[i] - minus[i]) / (2.0 * h);
    return plus;
  };
  d[0] = central(state_at(params, th + h, ph, xi), state_at(params, th - h, ph, xi));
  d[1] = central(state_at(params, th, ph + h, xi), state_at(params, th, ph - h, xi));
  d[2] = central(state_at(params, th, ph, xi + h), state_at(params, th, ph, xi - h));
  auto qgt = [&](int a, int b) {
    return std::real(dot(d[a], d[b]) - dot(d[a], psi) * dot(psi, d[b]));
  };
  MetricSample g;
  g.g_theta_theta = qgt(0, 0);
  g.g_phi_phi = qgt(1, 1);
  g.g_xi_xi = qgt(2, 2);
  g.g_phi_xi = qgt(1, 2);
  g.g_theta_phi = qgt(0, 1);
  g.g_theta_xi = qgt(0, 2);
  return g;
}

}  // namespace

MetricSample fs_metric_numeric(const ModelParams& params, double xi, double step) {
  params.validate();
  if (!(step > 0.0)) throw std::invalid_argument("fs_metric_numeric: step must be positive");
  if (params.theta < step || params.theta > kPi - step)
    throw singularity_error("fs_metric_numeric: theta within one step of a pole");
  const MetricSample g1 = metric_from_differences(params, xi, step);
  const MetricSample g2 = metric_from_differences(params, xi, 0.5 * step);
  auto rich = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };
  MetricSample g;
  g.g_theta_theta = rich(g1.g_theta_theta, g2.g_theta_theta);
  g.g_phi_phi = rich(g1.g_phi_phi, g2.g_phi_phi);
  g.g_xi_xi = rich(g1.g_xi_xi, g2.g_xi_xi);
  g.g_phi_xi = rich(g1.g_phi_xi, g2.g_phi_xi);
  g.g_theta_phi = rich(g1.g_theta_phi, g2.g_theta_phi);
  g.g_theta_xi = rich(g1.g_theta_xi, g2.g_theta_xi);
  return g;
}

}  // namespace spingeo
