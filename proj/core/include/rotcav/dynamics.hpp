#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rotcav/error.hpp"

namespace rotcav {

/// Occupation probabilities of the two levels at a given time.
struct PopulationState {
  double p_ground;
  double p_excited;
  double time;  // s

  static PopulationState ground(double t = 0.0) { return {1.0, 0.0, t}; }
  static PopulationState excited(double t = 0.0) { return {0.0, 1.0, t}; }
};

/// Stationary populations of the rate equations, p_e = up / (up + down).
PopulationState steady_state(double gamma_up, double gamma_down);

/// Exact solution of dp_e/dt = up * p_g - down * p_e after a further time t.
PopulationState evolve(const PopulationState& initial, double gamma_up, double gamma_down,
                       double t);

/// Relaxation time 1 / (up + down).
double relaxation_time(double gamma_up, double gamma_down);

/// Mean number of jumps (in either direction) per unit time in steady state.
double expected_jump_rate(double gamma_up, double gamma_down);

enum class Level { Ground, Excited };

/// Identifier of the random stream used by `simulate_jumps`, recorded in
/// every TrajectoryStats.
inline constexpr std::string_view kJumpRngAlgorithm = "mt19937_64+inverse-cdf-exponential";

struct TrajectoryStats {
  std::uint64_t n_up = 0;    // ground -> excited jumps
  std::uint64_t n_down = 0;  // excited -> ground jumps
  double duration = 0.0;     // s
  double time_excited = 0.0; // s spent in the excited level
  double excited_fraction = 0.0;
  std::uint64_t seed = 0;
  Level final_level = Level::Ground;
  std::string_view rng_algorithm = kJumpRngAlgorithm;

  bool operator==(const TrajectoryStats&) const = default;
};

/// One telegraph trajectory of a single atom: exponential dwell times with
/// mean 1/up in the ground level and 1/down in the excited level.
/// Deterministic for a given seed.
TrajectoryStats simulate_jumps(double gamma_up, double gamma_down, double duration,
                               std::uint64_t seed, Level start = Level::Ground);

/// Independent trajectories with seeds base_seed, base_seed + 1, ... The
/// result is in seed order regardless of `threads` (0 = hardware concurrency).
std::vector<TrajectoryStats> simulate_ensemble(double gamma_up, double gamma_down,
                                               double duration, std::uint64_t base_seed,
                                               std::size_t trajectories, unsigned threads = 0,
                                               Level start = Level::Ground);

}  // namespace rotcav
