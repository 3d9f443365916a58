#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spingeo/dynamics.hpp"
#include "spingeo/model.hpp"

using namespace spingeo;

TEST_CASE("speed closed form at pinned points") {
  CHECK(speed_closed({2, kPi / 2, 0.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(speed_closed({2, kPi / 2, 0.0, 3.0}) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(speed_closed({3, 0.0, 0.0, 1.0}) == doctest::Approx(0.0));
  CHECK(speed_closed({1, 1.2, 0.0, 1.0}) == doctest::Approx(0.0));  // single spin never moves
  // symmetric about the equator
  for (int n : {2, 4, 7}) {
    for (double th : {0.3, 0.9, 1.4}) {
      CHECK(speed_closed({n, th, 0.0, 1.0}) ==
            doctest::Approx(speed_closed({n, kPi - th, 0.0, 1.0})).epsilon(1e-12));
    }
  }
}

TEST_CASE("speed equals one energy uncertainty, exactly") {
  for (int n : {2, 3, 5, 8, 12}) {
    for (double th : {0.2, 0.8, kPi / 2, 2.4}) {
      for (double j : {1.0, 2.7}) {
        const ModelParams p{n, th, 0.4, j};
        const double a = speed_closed(p);
        const double b = speed_from_energy(p);
        CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, a));
      }
    }
  }
}

TEST_CASE("fastest point of the xi-circle") {
  for (int n : {3, 5, 9}) {
    const double expected = std::asin(std::sqrt((n - 1.0) / (2.0 * n - 3.0)));
    CHECK(argmax_speed_theta(n) == doctest::Approx(expected).epsilon(1e-8));
    CHECK(brachistochrone(n).theta_max == doctest::Approx(expected).epsilon(1e-8));
  }
  // two spins: the equator itself is the fastest ring
  CHECK(argmax_speed_theta(2) == doctest::Approx(kPi / 2).epsilon(1e-8));
  for (double j : {1.0, 2.0}) {
    CHECK(brachistochrone(2, j).v_max == doctest::Approx(j / 2).epsilon(1e-12));
  }
  // v_max really is the speed at theta_max, and beats nearby points
  const Brachistochrone b5 = brachistochrone(5, 1.3);
  CHECK(b5.v_max == doctest::Approx(speed_closed({5, b5.theta_max, 0.0, 1.3})).epsilon(1e-12));
  CHECK(b5.v_max >= speed_closed({5, b5.theta_max + 0.01, 0.0, 1.3}));
  CHECK(b5.v_max >= speed_closed({5, b5.theta_max - 0.01, 0.0, 1.3}));
}

TEST_CASE("path length and its minimum-time ratio") {
  const ModelParams p{4, 0.9, 0.0, 2.0};
  CHECK(fs_distance(p, 0.0) == 0.0);
  for (double xi : {0.4, 1.9}) {
    CHECK(fs_distance(p, xi) == doctest::Approx(xi * speed_closed(p) / p.j).epsilon(1e-14));
  }
  CHECK_THROWS_AS(fs_distance(p, -0.1), std::invalid_argument);

  CHECK(brachistochrone(2).s_min_per_xi == doctest::Approx(0.5).epsilon(1e-15));
  for (int n : {2, 3, 6, 11}) {
    const Brachistochrone b = brachistochrone(n);
    CHECK(b.s_min_per_xi == doctest::Approx(0.5 * std::sqrt(n * (n - 1.0) / 2)).epsilon(1e-14));
    CHECK(b.t_min_over_t ==
          doctest::Approx(std::sqrt(2.0 * n - 3.0) / (n - 1.0)).epsilon(1e-14));
    // the ratio is the geodesic-to-actual identity S_min / (xi v_max / J)
    CHECK(b.t_min_over_t == doctest::Approx(b.s_min_per_xi / b.v_max).epsilon(1e-12));
  }
  CHECK(brachistochrone(2).t_min_over_t == 1.0);
  CHECK(brachistochrone(3).t_min_over_t == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  double prev = brachistochrone(2).t_min_over_t;
  for (int n = 3; n <= 40; ++n) {
    const double cur = brachistochrone(n).t_min_over_t;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(brachistochrone(1), std::invalid_argument);
  CHECK_THROWS_AS(argmax_speed_theta(1), std::invalid_argument);
  CHECK_THROWS_AS(brachistochrone(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(speed_closed({3, 1.0, 0.0, -1.0}), std::invalid_argument);
}
