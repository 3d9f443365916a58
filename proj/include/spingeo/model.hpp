#pragma once
// Shared parameter bundle and error types for the collective-spin ensemble
// H = J (sum_i S^z_i)^2, hbar = 1.  Dimensionless time xi = J * t throughout.

#include <numbers>
#include <stdexcept>
#include <string>

namespace spingeo {

inline constexpr double kPi = std::numbers::pi;

// Closed form diverges at the requested point (state-space poles theta in {0, pi}).
struct singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A chart denominator vanishes (C -> boundary, sin xi -> 0, curvature pole NK = 16).
struct coordinate_singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Survival amplitude vanishes; its argument carries no information.
struct undefined_phase_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A numerical guarantee was violated (e.g. density-matrix eigenvalue < -1e-12).
struct computational_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelParams {
  int n = 2;           // number of spin-1/2 particles
  double theta = 0.0;  // polar angle of the initial product state
  double phi = 0.0;    // azimuthal angle
  double j = 1.0;      // coupling J > 0

  void validate() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
    if (n > 4096) throw std::length_error("n too large: " + std::to_string(n));
    if (!(theta >= 0.0 && theta <= kPi))
      throw std::invalid_argument("theta must lie in [0, pi], got " + std::to_string(theta));
    if (!(j > 0.0)) throw std::invalid_argument("coupling must be positive, got " + std::to_string(j));
  }
};

}  // namespace spingeo
