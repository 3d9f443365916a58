#include "spingeo/dynamics.hpp"

#include <cmath>

#include "spingeo/dicke.hpp"
#include "spingeo/full_state.hpp"

namespace spingeo {

double speed_closed(const ModelParams& params) {
  params.validate();
  if (params.n < 2) return 0.0;  // single spin is stationary under (S^z)^2 up to phase
  const double n = params.n;
  const double s2 = std::sin(params.theta) * std::sin(params.theta);
  return 0.5 * params.j * std::sqrt(n * (n - 1.0) * s2 * (n - 1.0 - (n - 1.5) * s2));
}

double speed_from_energy(const ModelParams& params) {
  params.validate();
  const EnergyMoments m =
      params.n <= kMaxOracleSpins ? full_energy_moments_oracle(params) : energy_moments(params);
  return std::sqrt(std::max(0.0, m.variance));
}

double fs_distance(const ModelParams& params, double xi) {
  if (xi < 0.0) throw std::invalid_argument("fs_distance: xi must be >= 0");
  return xi * speed_closed(params) / params.j;
}

double argmax_speed_theta(int n, double j) {
  if (n < 2) throw std::invalid_argument("argmax_speed_theta: n must be >= 2");
  auto v = [&](double theta) { return speed_closed({n, theta, 0.0, j}); };
  // Golden-section maximum on (0, pi/2]; V^2 is monotone in sin^2 theta up to
  // the stationary point, so the restriction is unimodal.
  double a = 1e-9, b = 0.5 * kPi;
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = v(c), fd = v(d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - invphi * (b - a); fc = v(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + invphi * (b - a); fd = v(d);
    }
  }
  return 0.5 * (a + b);
}

Brachistochrone brachistochrone(int n, double j) {
  if (n < 2) throw std::invalid_argument("brachistochrone: n must be >= 2");
  if (!(j > 0.0)) throw std::invalid_argument("brachistochrone: coupling must be positive");
  Brachistochrone b;
  b.theta_max = std::asin(std::sqrt((n - 1.0) / (2.0 * n - 3.0)));
  b.v_max = j * (n - 1.0) * std::sqrt(n * (n - 1.0) / (8.0 * (2.0 * n - 3.0)));
  b.s_min_per_xi = 0.5 * std::sqrt(0.5 * n * (n - 1.0));
  b.t_min_over_t = std::sqrt(2.0 * n - 3.0) / (n - 1.0);
  return b;
}

}  // namespace spingeo
