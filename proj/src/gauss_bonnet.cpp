#include "spingeo/gauss_bonnet.hpp"

#include <cmath>
#include <functional>

#include "spingeo/curvature.hpp"
#include "spingeo/metric.hpp"

namespace spingeo {

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_simpson(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 40);
}

}  // namespace

double gauss_bonnet_bulk(int n, double tol, double eps) {
  if (n < 2) throw std::invalid_argument("gauss_bonnet_bulk: n must be >= 2");
  auto integrand = [n](double theta) {
    const ModelParams p{n, theta, 0.0, 1.0};
    const MetricSample g = fs_metric_closed(p);
    return gaussian_curvature_closed(p) * std::sqrt(g.g_theta_theta * g.g_xi_xi);
  };
  return 2.0 * kPi * integrate(integrand, eps, kPi - eps, tol);
}

double defect_limit_ratio(int n) {
  if (n < 2) throw std::invalid_argument("defect_limit_ratio: n must be >= 2");
  auto ratio = [n](double theta) {
    const ModelParams p{n, theta, 0.0, 1.0};
    const MetricSample g = fs_metric_closed(p);
    return std::sqrt(g.g_xi_xi) / (std::sqrt(g.g_theta_theta) * theta);
  };
  // ratio(theta) = r0 + c theta^2 + O(theta^4): one Richardson step in theta^2.
  const double t0 = 1e-3;
  return (4.0 * ratio(0.5 * t0) - ratio(t0)) / 3.0;
}

double angular_defect(int n) {
  // Cones at theta = 0 and theta = pi; by the theta -> pi - theta symmetry of
  // the metric both limits coincide, but measure each side anyway.
  auto ratio_at = [n](double theta0, double sign) {
    auto ratio = [&](double eps) {
      const ModelParams p{n, theta0 + sign * eps, 0.0, 1.0};
      const MetricSample g = fs_metric_closed(p);
      return std::sqrt(g.g_xi_xi) / (std::sqrt(g.g_theta_theta) * eps);
    };
    const double t0 = 1e-3;
    return (4.0 * ratio(0.5 * t0) - ratio(t0)) / 3.0;
  };
  const double r_north = ratio_at(0.0, 1.0);
  const double r_south = ratio_at(kPi, -1.0);
  return 2.0 * kPi * (1.0 - r_north) + 2.0 * kPi * (1.0 - r_south);
}

GaussBonnetReport gauss_bonnet(int n) {
  GaussBonnetReport r;
  r.bulk = gauss_bonnet_bulk(n);
  r.defect = angular_defect(n);
  r.defect_limit_ratio = defect_limit_ratio(n);
  r.euler_characteristic = (r.bulk + r.defect) / (2.0 * kPi);
  return r;
}

}  // namespace spingeo
