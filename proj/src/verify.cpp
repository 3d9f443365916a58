#include "spingeo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "spingeo/cli_app.hpp"
#include "spingeo/curvature.hpp"
#include "spingeo/dicke.hpp"
#include "spingeo/dynamics.hpp"
#include "spingeo/full_state.hpp"
#include "spingeo/gauss_bonnet.hpp"
#include "spingeo/metric.hpp"
#include "spingeo/phases.hpp"
#include "spingeo/two_spin.hpp"

namespace spingeo {

int VerifyReport::failed_count() const {
  int k = 0;
  for (const auto& c : checks)
    if (c.status == "fail") ++k;
  return k;
}

bool VerifyReport::all_passed() const { return failed_count() == 0; }

namespace {

double uniform01(std::mt19937_64& g) {
  // fixed bit mapping so the stream is identical on every platform
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

struct Recorder {
  const VerifyOptions& opts;
  VerifyReport& report;

  double tol_for(const std::string& key, const std::string& name, double fallback) const {
    auto it = opts.tolerance_overrides.find(name);
    if (it == opts.tolerance_overrides.end()) it = opts.tolerance_overrides.find(key);
    return it == opts.tolerance_overrides.end() ? fallback : it->second;
  }

  void close(const std::string& name, const std::string& key, const std::string& claim,
             double measured, double expected, double tol) {
    const double t = tol_for(key, name, tol);
    const bool ok = std::abs(measured - expected) <= t;
    report.checks.push_back({name, claim, ok ? "pass" : "fail", measured, expected, t});
  }

  // strict upper bound (relaxable by override)
  void below(const std::string& name, const std::string& key, const std::string& claim,
             double measured, double bound, double tol = 0.0) {
    const double t = tol_for(key, name, tol);
    const bool ok = measured < bound + t;
    report.checks.push_back({name, claim, ok ? "pass" : "fail", measured, bound, t});
  }

  // known mismatch: recorded, never pass, never fail
  void flag(const std::string& name, const std::string& claim, double measured, double expected,
            double tol) {
    report.checks.push_back({name, claim, "discrepancy-documented", measured, expected, tol});
  }
};

void criterion_1_representation(Recorder& r) {
  std::mt19937_64 gen(987654321ULL);
  double min_fid = 1.0;
  for (int n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      ModelParams p{n, uniform01(gen) * kPi, uniform01(gen) * 2.0 * kPi, 1.0};
      const double xi = uniform01(gen) * 2.0 * kPi;
      const FullState via_dicke = dicke_to_full(evolve(p, xi));
      const FullState dense = full_evolve_oracle(p, xi);
      min_fid = std::min(min_fid, fidelity(via_dicke, dense));
    }
  }
  r.close("01-representation/dicke-vs-dense-propagator-fidelity", "representation",
          "symmetric-subspace evolution reproduces the dense 2^N propagator for N=2..12, "
          "50 random (theta, phi, xi) draws each",
          min_fid, 1.0, 1e-12);
}

void criterion_2_metric(Recorder& r) {
  const int n_cal = 3;
  const ModelParams cal{n_cal, 0.9, 0.4, 1.0};
  const double factor =
      fs_metric_numeric(cal, 0.7).g_phi_xi / fs_metric_closed(cal).g_phi_xi;

  double worst_diag = 0.0, worst_cross = 0.0;
  for (int n : {2, 3, 5, 8}) {
    for (int k = 0; k < 100; ++k) {
      ModelParams p{n, kPi * (k + 0.5) / 100.0, 0.4 + 0.01 * k, 1.0};
      const double xi = 0.7 + 0.005 * k;
      const MetricSample fd = fs_metric_numeric(p, xi);
      const MetricSample cf = fs_metric_closed(p);
      worst_diag = std::max({worst_diag, std::abs(fd.g_theta_theta - cf.g_theta_theta),
                             std::abs(fd.g_phi_phi - cf.g_phi_phi),
                             std::abs(fd.g_xi_xi - cf.g_xi_xi)});
      worst_cross = std::max(worst_cross, std::abs(fd.g_phi_xi - factor * cf.g_phi_xi));
    }
  }
  r.close("02-metric/diagonal-components-vs-finite-difference", "metric",
          "closed-form g_tt, g_pp, g_xx match the finite-difference metric at 100 interior "
          "polar angles for N in {2,3,5,8}",
          worst_diag, 0.0, 1e-6);
  r.close("02-metric/cross-term-calibration-factor", "metric",
          "ratio of finite-difference to closed-form g_px on one calibration point; 1 means "
          "the full printed coefficient (1/4)N(N-1)cos(theta)sin^2(theta), not half of it",
          factor, 1.0, 1e-6);
  r.close("02-metric/cross-term-convention-holds-everywhere", "metric",
          "the cross-term convention calibrated on one point fits every other grid point",
          worst_cross, 0.0, 1e-6);
}

void criterion_3_curvature(Recorder& r) {
  double worst_rel = 0.0;
  double max_of_minima = -1e300;
  for (int n = 2; n <= 6; ++n) {
    double min_k = 1e300;
    for (int k = 0; k <= 80; ++k) {
      ModelParams p{n, 0.1 + (kPi - 0.2) * k / 80.0, 0.0, 1.0};
      const double kc = gaussian_curvature_closed(p);
      const double kn = gaussian_curvature_numeric(p);
      worst_rel = std::max(worst_rel, std::abs(kn - kc) / std::max(std::abs(kc), 1.0));
      min_k = std::min(min_k, kc);
    }
    if (n >= 3) max_of_minima = std::max(max_of_minima, min_k);
  }
  r.close("03-curvature/closed-vs-christoffel-numeric", "curvature",
          "closed curvature matches the Christoffel-based numeric route on theta in "
          "[0.1, pi-0.1] for N=2..6 (relative, floored at |K|=1)",
          worst_rel, 0.0, 1e-5);
  r.close("03-curvature/equator-flatness-two-spins", "curvature",
          "two-spin curvature vanishes on the equator", gaussian_curvature_closed({2, kPi / 2, 0.0, 1.0}),
          0.0, 1e-12);
  r.below("03-curvature/negative-region-exists-beyond-two-spins", "curvature",
          "every N >= 3 surface has a negatively curved band (largest per-N minimum shown)",
          max_of_minima, 0.0);
}

void criterion_4_gauss_bonnet(Recorder& r) {
  double worst_bulk = 0.0, worst_chi = 0.0, worst_ratio = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const GaussBonnetReport g = gauss_bonnet(n);
    worst_bulk = std::max(worst_bulk, std::abs(g.bulk - 4.0 * kPi * (n - 1)));
    worst_chi = std::max(worst_chi, std::abs(g.euler_characteristic - 2.0));
    worst_ratio = std::max(worst_ratio, std::abs(g.defect_limit_ratio - (n - 1)));
  }
  r.close("04-gauss-bonnet/bulk-integral-matches-topology", "gauss_bonnet",
          "curvature integral over the smooth surface equals 4 pi (N-1) for N=2..6",
          worst_bulk, 0.0, 1e-3);
  r.close("04-gauss-bonnet/polar-defect-limit-ratio", "gauss_bonnet",
          "small-angle circumference ratio at the poles tends to N-1, fixing the conical defect",
          worst_ratio, 0.0, 1e-6);
  r.close("04-gauss-bonnet/euler-characteristic-rounds-to-two", "gauss_bonnet",
          "bulk plus defect divided by 2 pi rounds to the sphere's Euler number",
          worst_chi, 0.0, 0.5);
}

void criterion_5_phases(Recorder& r) {
  double worst_closed = 0.0, worst_dyn = 0.0, worst_pole = 0.0;
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        ModelParams p{n, kPi * (i + 0.5) / 20.0, 0.0, 1.0};
        const double xi = 0.1 + 0.32 * j;
        const double closed_g = total_phase(p, xi) - dynamic_phase(p, xi);
        const PhaseDecomposition d = geometric_phase(p, xi);
        worst_closed = std::max(worst_closed, phase_distance(closed_g, d.geometric));
        worst_dyn = std::max(
            worst_dyn,
            std::abs(d.dynamic - (-xi * full_energy_moments_oracle(p).mean / p.j)));
      }
    }
    for (double th : {0.0, kPi}) {
      for (double xi : {0.3, 1.7, 5.2}) {
        ModelParams p{n, th, 0.0, 1.0};
        worst_pole = std::max(worst_pole, std::abs(geometric_phase(p, xi).geometric));
      }
    }
  }
  r.close("05-phases/closed-geometric-vs-decomposition", "phases",
          "principal-branch geometric phase agrees with the unwrapped total-minus-dynamic "
          "decomposition mod 2 pi on a 20x20 (theta, xi) grid for N in {2,3,4}",
          worst_closed, 0.0, 1e-9);
  r.close("05-phases/dynamic-phase-vs-energy-oracle", "phases",
          "dynamic phase equals -xi <H>/J with <H> from the dense-operator average",
          worst_dyn, 0.0, 1e-12);
  r.close("05-phases/polar-states-gain-no-geometric-phase", "phases",
          "energy eigenstates at theta in {0, pi} accrue purely dynamic phase",
          worst_pole, 0.0, 1e-12);
}

void criterion_6_aa_phase(Recorder& r) {
  double worst = 0.0;
  for (int n : {2, 3, 4}) {
    for (double th : {0.3, 0.9, kPi / 2, 2.2}) {
      ModelParams p{n, th, 0.0, 1.0};
      worst = std::max(worst, phase_distance(aa_phase_numeric(p).value, aa_phase_closed(p)));
    }
  }
  r.close("06-aa-phase/cycle-integral-vs-closed-form", "aa_phase",
          "cyclic geometric phase from the 2 pi projective cycle matches "
          "-(pi/2) N (N-1) sin^2(theta) mod 2 pi",
          worst, 0.0, 1e-6);
  r.close("06-aa-phase/topological-phase-two-spins", "aa_phase",
          "two-spin topological phase equals -2 pi exactly", topological_phase(2), -2.0 * kPi,
          0.0);
}

void criterion_7_speed(Recorder& r) {
  double worst_rel = 0.0;
  double ratio_spot = 0.0;
  for (int n = 2; n <= 12; ++n) {
    for (double j : {1.0, 2.7}) {
      for (int k = 0; k < 24; ++k) {
        ModelParams p{n, kPi * (k + 0.5) / 24.0, 0.0, j};
        const double v = speed_closed(p);
        const double de = speed_from_energy(p);
        worst_rel = std::max(worst_rel, std::abs(v - de) / de);
      }
    }
  }
  {
    ModelParams spot{4, 1.1, 0.0, 1.0};
    ratio_spot = 2.0 * speed_from_energy(spot) / speed_closed(spot);
  }
  const double worst_vmax = std::max(std::abs(brachistochrone(2, 1.0).v_max - 0.5),
                                     std::abs(brachistochrone(2, 3.0).v_max - 1.5));
  r.close("07-speed/speed-equals-energy-uncertainty", "speed",
          "evolution speed equals the energy uncertainty sqrt(<H^2>-<H>^2) from the dense "
          "operator, N=2..12 (relative)",
          worst_rel, 0.0, 1e-10);
  r.close("07-speed/max-speed-two-spins-is-half-coupling", "speed",
          "peak two-spin speed is J/2", worst_vmax, 0.0, 1e-12);
  r.flag("07-speed/stated-double-uncertainty-factor",
         "the speed is stated as twice the energy uncertainty, but the formula that actually "
         "matches every pinned value (including V_max = J/2 at N=2) is V = Delta E; the "
         "measured ratio 2 Delta E / V is exactly 2",
         ratio_spot, 1.0, 1e-10);
}

void criterion_8_brachistochrone(Recorder& r) {
  double worst_cons = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const Brachistochrone b = brachistochrone(n, 1.0);
    worst_cons = std::max(worst_cons, std::abs(b.t_min_over_t - b.s_min_per_xi / b.v_max));
  }
  bool monotone = true;
  double prev = brachistochrone(2).t_min_over_t;
  for (int n = 3; n <= 64; ++n) {
    const double cur = brachistochrone(n).t_min_over_t;
    monotone = monotone && cur < prev && cur < 1.0;
    prev = cur;
  }
  double worst_arg = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const double closed = std::asin(std::sqrt((n - 1.0) / (2.0 * n - 3.0)));
    worst_arg = std::max(worst_arg, std::abs(argmax_speed_theta(n) - closed));
  }
  r.close("08-brachistochrone/time-ratio-consistent-with-speed-and-distance",
          "brachistochrone",
          "t_min/t equals the geodesic rate divided by the peak speed for N=2..12",
          worst_cons, 0.0, 1e-12);
  r.close("08-brachistochrone/two-spin-times-coincide", "brachistochrone",
          "optimal and ordinary evolution times coincide for two spins",
          brachistochrone(2).t_min_over_t, 1.0, 0.0);
  r.close("08-brachistochrone/ratio-decreasing-below-one", "brachistochrone",
          "sqrt(2N-3)/(N-1) is strictly decreasing and below 1 for every N >= 3 (checked to N=64)",
          monotone ? 1.0 : 0.0, 1.0, 0.0);
  r.close("08-brachistochrone/ratio-vanishes-for-many-spins", "brachistochrone",
          "the optimal-to-ordinary time ratio tends to zero with the particle number",
          brachistochrone(10000).t_min_over_t, 0.0, 0.02);
  r.close("08-brachistochrone/numeric-argmax-matches-closed-theta", "brachistochrone",
          "golden-section maximizer of the speed lands on arcsin sqrt((N-1)/(2N-3)) for N=2..8",
          worst_arg, 0.0, 1e-6);
}

void criterion_9_concurrence(Recorder& r) {
  double worst = 0.0, worst_pole = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double th = kPi * i / 49.0;
    for (int j = 0; j < 50; ++j) {
      const double xi = 2.0 * kPi * j / 49.0;
      ModelParams p{2, th, 0.6, 1.0};
      const double woot =
          wootters_concurrence(reduced_two_spin_density(full_evolve_oracle(p, xi), 1, 2));
      worst = std::max(worst, std::abs(woot - concurrence_closed(th, xi)));
      if (i == 0 || i == 49) worst_pole = std::max(worst_pole, woot);
    }
  }
  const double peak = wootters_concurrence(
      reduced_two_spin_density(full_evolve_oracle({2, kPi / 2, 0.6, 1.0}, kPi / 2), 1, 2));
  r.close("09-concurrence/wootters-vs-closed-form", "concurrence",
          "Wootters concurrence of the evolved two-spin state equals sin^2(theta) |sin xi| "
          "on a 50x50 grid",
          worst, 0.0, 1e-12);
  r.close("09-concurrence/maximum-at-quarter-cycle-equator", "concurrence",
          "entanglement peaks at exactly 1 for theta = pi/2, xi = pi/2", peak, 1.0, 1e-12);
  r.close("09-concurrence/vanishes-for-product-states", "concurrence",
          "polar initial states stay unentangled at all times", worst_pole, 0.0, 1e-12);
}

void criterion_10_concurrence_chart(Recorder& r) {
  const double jj = 1.3;
  double worst = 0.0;
  for (int i = 0; i < 12; ++i) {
    const double th = kPi * (i + 0.5) / 12.0;
    for (double xi : {0.4, 1.0, 1.7, 2.0, 2.6, 3.7, 5.1}) {
      const double c = concurrence_closed(th, xi);
      ModelParams p{2, th, 0.6, jj};
      ModelParams p1{2, th, 0.6, 1.0};
      worst = std::max(worst, std::abs(curvature_of_concurrence(c, xi) -
                                       gaussian_curvature_closed(p1)));
      worst = std::max(worst, phase_distance(geometric_phase_of_concurrence(c, xi),
                                             geometric_phase(p1, xi).geometric));
      worst = std::max(worst, std::abs(aa_phase_of_concurrence(c, xi) - aa_phase_closed(p1)));
      worst = std::max(worst, std::abs(speed_of_concurrence(c, xi, jj) - speed_closed(p)));
      worst = std::max(worst, std::abs(distance_of_concurrence(c, xi) - fs_distance(p1, xi)));
      worst = std::max(worst, std::abs(optimal_time_of_concurrence(c, xi, jj) -
                                       2.0 * fs_distance(p, xi) / jj));
      const double v1 = speed_closed(p1);
      worst = std::max(worst, std::abs(optimal_metric_coefficient(c, xi) - v1 * v1));
    }
  }
  double worst_k0 = 0.0;
  for (double xi : {0.4, 1.0, 2.0, 2.6})
    worst_k0 = std::max(worst_k0, std::abs(curvature_of_concurrence(0.0, xi) - 5.0));
  double worst_cc = 0.0;
  for (double xi : {1.0, 2.0})
    worst_cc = std::max(worst_cc,
                        std::abs(critical_concurrence_numeric(xi) - critical_concurrence(xi)));
  r.close("10-concurrence-chart/quantities-agree-across-charts", "concurrence_chart",
          "curvature, geometric phase, cyclic phase, speed, distance, optimal time and the "
          "optimal metric coefficient give identical values in the (C, xi) and (theta, xi) charts",
          worst, 0.0, 1e-9);
  r.close("10-concurrence-chart/zero-concurrence-curvature-is-five", "concurrence_chart",
          "the separable edge of the concurrence chart has curvature 5", worst_k0, 0.0, 1e-12);
  r.close("10-concurrence-chart/critical-concurrence-matches-printed-form", "concurrence_chart",
          "numeric minimizer of the geometric phase over C matches the closed critical "
          "concurrence at xi in {1, 2}",
          worst_cc, 0.0, 1e-4);
}

void criterion_11_discrepancies(Recorder& r) {
  const double k_eq = gaussian_curvature_closed({2, kPi / 2, 0.0, 1.0});
  r.flag("11-discrepancies/aa-curvature-inversion",
         "the published curvature-to-cyclic-phase inversion gives -2.5 pi at N=2 on the "
         "flat equator while the direct cyclic phase there is -pi; the printed relation is "
         "evaluated as published and recorded, not asserted",
         aa_phase_from_curvature(2, k_eq), aa_phase_closed({2, kPi / 2, 0.0, 1.0}), 1e-6);
  const double radius = std::sqrt(fs_metric_numeric({2, 1.1, 0.3, 1.0}, 0.0).g_theta_theta);
  r.flag("11-discrepancies/initial-sphere-radius",
         "the initial-state sphere is described with radius 2 sqrt(N), but the metric block "
         "(N/4)(d theta^2 + sin^2 theta d phi^2) measured by finite differences has radius "
         "sqrt(N)/2 (values shown for N=2)",
         radius, 2.0 * std::sqrt(2.0), 1e-6);
  r.flag("11-discrepancies/odd-spin-count-period",
         "the state is claimed to return after xi = 2 pi for every N, but for odd N the "
         "measured amplitude period is 8 pi (ray period pi); cyclic-phase integrals therefore "
         "run over the verified projective period",
         measured_periods(3).amplitude, 2.0 * kPi, 1e-12);
}

void criterion_12_figures(Recorder& r) {
  const FigureConfig cfg;
  int regenerated = 0;
  CsvTable curv, speed, aa, kc;
  for (const auto& id : figure_ids()) {
    try {
      CsvTable t = figure_table(id, cfg);
      const bool theta_fig = t.header.at(0) == "theta";
      const std::size_t want_rows =
          theta_fig ? static_cast<std::size_t>(cfg.theta_points)
                    : static_cast<std::size_t>(cfg.c_points);
      if (t.header.size() >= 2 && t.rows.size() == want_rows) ++regenerated;
      if (id == "curvature_theta") curv = t;
      if (id == "speed_theta") speed = t;
      if (id == "aa_theta") aa = t;
      if (id == "k_of_c") kc = t;
    } catch (const std::exception&) {
      // counted as not regenerated
    }
  }
  auto mirror_worst = [](const CsvTable& t) {
    double w = 0.0;
    const std::size_t last = t.rows.size() - 1;
    for (std::size_t k = 0; k <= last; ++k)
      for (std::size_t col = 1; col < t.header.size(); ++col) {
        const auto& a = t.rows[k][col];
        const auto& b = t.rows[last - k][col];
        if (a && b) w = std::max(w, std::abs(*a - *b));
      }
    return w;
  };
  double worst_min = 0.0;
  for (std::size_t col = 1; col < aa.header.size(); ++col) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < aa.rows.size(); ++k)
      if (*aa.rows[k][col] < *aa.rows[best][col]) best = k;
    worst_min = std::max(worst_min, std::abs(*aa.rows[best][0] - kPi / 2));
  }
  double worst_k0 = 0.0;
  for (std::size_t col = 1; col < kc.header.size(); ++col)
    worst_k0 = std::max(worst_k0, std::abs(*kc.rows[0][col] - 5.0));

  r.close("12-figures/all-figure-tables-regenerate", "figures",
          "every one of the nine figure tables regenerates from the library alone",
          regenerated, 9.0, 0.0);
  r.close("12-figures/curvature-mirror-symmetry", "figures",
          "curvature series are symmetric about the equator", mirror_worst(curv), 0.0, 1e-9);
  r.close("12-figures/speed-mirror-symmetry", "figures",
          "speed series are symmetric about the equator", mirror_worst(speed), 0.0, 1e-9);
  r.close("12-figures/aa-phase-minimum-at-equator", "figures",
          "each cyclic-phase series attains its minimum exactly at theta = pi/2",
          worst_min, 0.0, 1e-12);
  r.close("12-figures/concurrence-curvature-intercept-five", "figures",
          "every k_of_c series starts at curvature 5 for C = 0", worst_k0, 0.0, 1e-12);
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Recorder rec{options, report};
  using clock = std::chrono::steady_clock;

  struct Entry {
    int criterion;
    void (*fn)(Recorder&);
  };
  const Entry entries[] = {
      {1, criterion_1_representation}, {2, criterion_2_metric},
      {3, criterion_3_curvature},      {4, criterion_4_gauss_bonnet},
      {5, criterion_5_phases},         {6, criterion_6_aa_phase},
      {7, criterion_7_speed},          {8, criterion_8_brachistochrone},
      {9, criterion_9_concurrence},    {10, criterion_10_concurrence_chart},
      {11, criterion_11_discrepancies},{12, criterion_12_figures},
  };
  for (const Entry& e : entries) {
    const auto t0 = clock::now();
    try {
      e.fn(rec);
    } catch (const std::exception& ex) {
      report.checks.push_back({"internal/criterion-" + std::to_string(e.criterion) + "-raised",
                               std::string("unexpected exception: ") + ex.what(), "fail", 0.0,
                               0.0, 0.0});
    }
    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
    report.timings.push_back({e.criterion, dt});
    report.total_seconds += dt;
  }
  return report;
}

JsonValue report_to_json(const VerifyReport& report) {
  JsonValue root = JsonValue::object();
  root.add("schema", JsonValue::integer(1));
  JsonValue checks = JsonValue::array();
  for (const auto& c : report.checks) {
    JsonValue item = JsonValue::object();
    item.add("name", JsonValue::string(c.name));
    item.add("claim", JsonValue::string(c.claim));
    item.add("status", JsonValue::string(c.status));
    item.add("measured", JsonValue::number(c.measured));
    item.add("expected", JsonValue::number(c.expected));
    item.add("tolerance", JsonValue::number(c.tolerance));
    checks.push(std::move(item));
  }
  root.add("checks", std::move(checks));
  root.add("failures", JsonValue::integer(report.failed_count()));
  return root;
}

}  // namespace spingeo
