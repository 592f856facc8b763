#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "rotcav/phys_core.hpp"
#include "rotcav/scan.hpp"

namespace rotcav::testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Parameter tuples covering every rotation regime. Frequencies span five
// decades, Q spans [1e3, 1e8], orbital speeds stay below 0.1 c, and the
// cavity is tuned either near one of the channel frequencies or at random.
class ParameterGenerator {
 public:
  explicit ParameterGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  double signed_dipole() {
    const double mag = log_uniform(1e-31, 1e-28);
    return uniform(0.0, 1.0) < 0.5 ? -mag : mag;
  }

  ParameterSet next() {
    ParameterSet p;
    p.omega0 = log_uniform(1e6, 1e11);
    // Regime mix: inertial, below omega0/2, (omega0/2, omega0], above omega0.
    switch (std::uniform_int_distribution<int>(0, 3)(rng_)) {
      case 0: p.omega_rot = 0.0; break;
      case 1: p.omega_rot = p.omega0 * uniform(0.0, 0.5); break;
      case 2: p.omega_rot = p.omega0 * uniform(0.5, 1.0) + 1e-9 * p.omega0; break;
      default: p.omega_rot = p.omega0 * uniform(1.0, 4.0) + 1e-9 * p.omega0; break;
    }
    const double max_radius = p.omega_rot > 0.0 ? 0.1 * kCodata2018.c / p.omega_rot : 1.0;
    p.radius = max_radius * uniform(0.0, 0.999);
    p.d_rho = signed_dipole();
    p.d_phi = signed_dipole();
    p.d_z = signed_dipole();
    p.env = EnvKind::Cavity;
    p.q = log_uniform(1e3, 1e8);
    p.volume = log_uniform(1e-18, 1e-9);
    const double targets[] = {p.omega0, p.omega0 + p.omega_rot, std::abs(p.omega0 - p.omega_rot),
                              std::abs(2.0 * p.omega_rot - p.omega0)};
    const double base = targets[std::uniform_int_distribution<int>(0, 3)(rng_)];
    p.omega_c = uniform(0.0, 1.0) < 0.5 && base > 0.0
                    ? base * (1.0 + uniform(-5.0, 5.0) / p.q)
                    : log_uniform(1e5, 1e12);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rotcav::testing
