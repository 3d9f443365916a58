#include "spingeo/two_spin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace spingeo {

using cdouble = std::complex<double>;

namespace {

double abs_sin_checked(double xi, const char* who) {
  const double s = std::abs(std::sin(xi));
  if (s < 1e-12)
    throw coordinate_singularity_error(std::string(who) +
                                       ": sin(xi) = 0, the concurrence chart degenerates");
  return s;
}

void check_concurrence_range(double c, double s, const char* who) {
  if (c < 0.0 || c > std::min(1.0, s) + 1e-15)
    throw std::invalid_argument(std::string(who) + ": concurrence outside [0, min(1, |sin xi|)]");
}

Eigen::Matrix4cd psd_sqrt(const Eigen::Matrix4cd& m, const char* who) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
  Eigen::Vector4d ev = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (ev(i) < -1e-12)
      throw computational_error(std::string(who) + ": eigenvalue " + std::to_string(ev(i)) +
                                " below the -1e-12 clipping tolerance");
    ev(i) = std::sqrt(std::max(0.0, ev(i)));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TwoSpinAmplitudes two_spin_state(double theta, double phi, double xi) {
  const ModelParams check{2, theta, phi, 1.0};
  check.validate();
  const double ch2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
  const double sh2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const double half_sin = 0.5 * std::sin(theta);
  const cdouble eip = std::exp(cdouble(0.0, phi));
  TwoSpinAmplitudes st;
  st.a = ch2 * std::exp(cdouble(0.0, -xi));
  st.b = half_sin * eip;
  st.c = half_sin * eip;
  st.d = sh2 * std::exp(cdouble(0.0, 2.0 * phi - xi));
  return st;
}

double wootters_concurrence(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).norm() > 1e-10)
    throw std::invalid_argument("wootters_concurrence: density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10)
    throw std::invalid_argument("wootters_concurrence: density matrix trace differs from 1");
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();  // sigma_y x sigma_y
  yy(0, 3) = -1.0; yy(1, 2) = 1.0; yy(2, 1) = 1.0; yy(3, 0) = -1.0;
  const Eigen::Matrix4cd sr = psd_sqrt(rho, "wootters_concurrence");
  const Eigen::Matrix4cd sr_tilde = yy * sr.conjugate() * yy;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(sr_tilde * sr);
  const Eigen::Vector4d l = svd.singularValues();  // descending
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double concurrence_closed(double theta, double xi) {
  const double s = std::sin(theta);
  return s * s * std::abs(std::sin(xi));
}

double reduced_concurrence(double theta, double xi) {
  abs_sin_checked(xi, "reduced_concurrence");
  const double s = std::sin(theta);
  return s * s;
}

double ds2_concurrence(double c, double xi, double dc, double dxi) {
  const double s = abs_sin_checked(xi, "ds2_concurrence");
  check_concurrence_range(c, s, "ds2_concurrence");
  if (c < 1e-15 || s - c < 1e-15)
    throw coordinate_singularity_error("ds2_concurrence: chart degenerates at C = 0 and C = |sin xi|");
  const double sx = std::sin(xi), cx = std::cos(xi);
  const double quad = dc * dc / (8.0 * c * (s - c));
  const double cross = -dc * dxi * cx / (4.0 * sx * (s - c));
  const double xixi =
      0.25 * c * (cx * cx / (2.0 * sx * sx * (s - c)) + (2.0 * s - c) / (sx * sx)) * dxi * dxi;
  return quad + cross + xixi;
}

double ds2_reduced(double c_r, double /*xi*/, double dc_r, double dxi) {
  if (c_r < 1e-15 || 1.0 - c_r < 1e-15)
    throw coordinate_singularity_error("ds2_reduced: chart degenerates at C_r in {0, 1}");
  return dc_r * dc_r / (8.0 * c_r * (1.0 - c_r)) + 0.25 * c_r * (2.0 - c_r) * dxi * dxi;
}

double curvature_of_concurrence(double c, double xi) {
  const double s = abs_sin_checked(xi, "curvature_of_concurrence");
  check_concurrence_range(c, s, "curvature_of_concurrence");
  const double den = c - 2.0 * s;
  if (std::abs(den) < 1e-12)
    throw coordinate_singularity_error("curvature_of_concurrence: pole at C = 2 |sin xi|");
  return 4.0 * (2.0 + s * (c - 3.0 * s) / (den * den));
}

bool negativity_condition(double c, double xi) {
  const double s = abs_sin_checked(xi, "negativity_condition");
  check_concurrence_range(c, s, "negativity_condition");
  return s * (c - 3.0 * s) < -2.0 * (c - 2.0 * s) * (c - 2.0 * s);
}

double geometric_phase_of_concurrence(double c, double xi) {
  const double s = abs_sin_checked(xi, "geometric_phase_of_concurrence");
  check_concurrence_range(c, s, "geometric_phase_of_concurrence");
  const double rest = 2.0 * s - c;
  return -std::atan2(rest * std::sin(xi), rest * std::cos(xi) + c) + xi * (1.0 - c / (2.0 * s));
}

double critical_concurrence(double xi) {
  if (!(xi > 0.0 && xi < kPi))
    throw std::invalid_argument("critical_concurrence: xi must lie in (0, pi)");
  const double sx = std::sin(xi);
  const double cot_half = std::cos(0.5 * xi) / std::sin(0.5 * xi);
  const double radicand = (sx / xi) * (2.0 - xi * sx - 2.0 * std::cos(xi));
  return sx - cot_half * std::sqrt(radicand);
}

double critical_concurrence_numeric(double xi) {
  if (!(xi > 0.0 && xi < kPi))
    throw std::invalid_argument("critical_concurrence_numeric: xi must lie in (0, pi)");
  const double s = std::sin(xi);
  auto f = [&](double c) { return geometric_phase_of_concurrence(c, xi); };
  double a = 1e-12, b = s * (1.0 - 1e-12);
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c1 = b - invphi * (b - a), c2 = a + invphi * (b - a);
  double f1 = f(c1), f2 = f(c2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      b = c2; c2 = c1; f2 = f1;
      c1 = b - invphi * (b - a); f1 = f(c1);
    } else {
      a = c1; c1 = c2; f1 = f2;
      c2 = a + invphi * (b - a); f2 = f(c2);
    }
  }
  return 0.5 * (a + b);
}

double aa_phase_of_concurrence(double c, double xi) {
  const double s = abs_sin_checked(xi, "aa_phase_of_concurrence");
  check_concurrence_range(c, s, "aa_phase_of_concurrence");
  return -kPi * c / s;
}

double speed_of_concurrence(double c, double xi, double j) {
  if (!(j > 0.0)) throw std::invalid_argument("speed_of_concurrence: coupling must be positive");
  const double s = abs_sin_checked(xi, "speed_of_concurrence");
  check_concurrence_range(c, s, "speed_of_concurrence");
  return 0.5 * j / s * std::sqrt(c * (2.0 * s - c));
}

double distance_of_concurrence(double c, double xi) {
  const double s = abs_sin_checked(xi, "distance_of_concurrence");
  check_concurrence_range(c, s, "distance_of_concurrence");
  return 0.5 * xi / s * std::sqrt(c * (2.0 * s - c));
}

double optimal_time_of_concurrence(double c, double xi, double j) {
  if (!(j > 0.0)) throw std::invalid_argument("optimal_time_of_concurrence: coupling must be positive");
  const double s = abs_sin_checked(xi, "optimal_time_of_concurrence");
  check_concurrence_range(c, s, "optimal_time_of_concurrence");
  return xi / (j * s) * std::sqrt(c * (2.0 * s - c));
}

double optimal_metric_coefficient(double c, double xi) {
  const double s = abs_sin_checked(xi, "optimal_metric_coefficient");
  check_concurrence_range(c, s, "optimal_metric_coefficient");
  const double sx = std::sin(xi);
  return c * (2.0 * s - c) / (4.0 * sx * sx);
}

}  // namespace spingeo
