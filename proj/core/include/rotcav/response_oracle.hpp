#pragma once

#include <optional>

#include "rotcav/phys_core.hpp"

namespace rotcav {

struct QuadratureParams {
  /// Time-domain truncation T in seconds. Defaults to `decay_times` cavity
  /// decay times, i.e. decay_times * Q / omega_c.
  std::optional<double> truncation;
  double decay_times = 20.0;
  /// Relative agreement required between successive panel refinements.
  double refinement_tol = 1e-11;
  /// Relative size of the [T, 2T] tail allowed before declaring the
  /// truncation premature.
  double truncation_tol = 1e-6;
  int initial_panels = 16;
  int max_panels = 1 << 16;
};

/// Cavity response computed the slow way: numerically integrates
///   V^-1 Re int_0^T exp(i omega t) C(t) dt,  C(t) = exp(-i omega_c t - (omega_c/Q) t),
/// the correlation function whose spectrum is the Lorentzian mode density.
/// Composite Gauss-Legendre panels are doubled until two refinements agree.
/// Throws QuadratureNotConverged if refinement stalls or T is too short for
/// the correlation to have decayed.
double response_oracle(const CavitySpec& cavity, double omega, const QuadratureParams& quad = {});

}  // namespace rotcav
