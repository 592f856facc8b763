#include "rotcav/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include <fmt/format.h>

namespace rotcav {

namespace {

void require_rates(double gamma_up, double gamma_down) {
  if (!(std::isfinite(gamma_up) && gamma_up >= 0.0 && std::isfinite(gamma_down) &&
        gamma_down >= 0.0)) {
    throw Error(ErrorCode::InvalidInput,
                fmt::format("rates must be finite and >= 0 (up = {}, down = {})", gamma_up,
                            gamma_down));
  }
  if (gamma_up + gamma_down == 0.0) {
    throw Error(ErrorCode::BothRatesZero, "excitation and emission rates are both zero");
  }
}

// Exponential variate by inverse CDF on a 53-bit uniform in (0, 1], so the
// stream depends only on mt19937_64, which the standard pins exactly.
double exponential(std::mt19937_64& rng, double rate) {
  const double u = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  return -std::log(u) / rate;
}

void require_duration(double duration) {
  if (!(duration > 0.0 && std::isfinite(duration))) {
    throw Error(ErrorCode::InvalidInput, fmt::format("duration must be > 0 (got {})", duration));
  }
}

}  // namespace

PopulationState steady_state(double gamma_up, double gamma_down) {
  require_rates(gamma_up, gamma_down);
  const double total = gamma_up + gamma_down;
  return {gamma_down / total, gamma_up / total, std::numeric_limits<double>::infinity()};
}

PopulationState evolve(const PopulationState& initial, double gamma_up, double gamma_down,
                       double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, fmt::format("t = {}", t));
  require_rates(gamma_up, gamma_down);
  const double total = gamma_up + gamma_down;
  const double p_star = gamma_up / total;
  const double p_e = p_star + (initial.p_excited - p_star) * std::exp(-total * t);
  return {1.0 - p_e, p_e, initial.time + t};
}

double relaxation_time(double gamma_up, double gamma_down) {
  require_rates(gamma_up, gamma_down);
  return 1.0 / (gamma_up + gamma_down);
}

double expected_jump_rate(double gamma_up, double gamma_down) {
  require_rates(gamma_up, gamma_down);
  if (gamma_up == 0.0 || gamma_down == 0.0) return 0.0;
  return 2.0 / (1.0 / gamma_up + 1.0 / gamma_down);
}

TrajectoryStats simulate_jumps(double gamma_up, double gamma_down, double duration,
                               std::uint64_t seed, Level start) {
  require_rates(gamma_up, gamma_down);
  require_duration(duration);

  std::mt19937_64 rng(seed);
  TrajectoryStats stats;
  stats.duration = duration;
  stats.seed = seed;

  Level level = start;
  double t = 0.0;
  while (true) {
    const double rate = level == Level::Ground ? gamma_up : gamma_down;
    const double dwell =
        rate > 0.0 ? exponential(rng, rate) : std::numeric_limits<double>::infinity();
    const double stay = std::min(dwell, duration - t);
    if (level == Level::Excited) stats.time_excited += stay;
    if (t + dwell >= duration) break;
    t += dwell;
    if (level == Level::Ground) {
      ++stats.n_up;
      level = Level::Excited;
    } else {
      ++stats.n_down;
      level = Level::Ground;
    }
  }
  stats.final_level = level;
  stats.excited_fraction = std::clamp(stats.time_excited / duration, 0.0, 1.0);
  return stats;
}

std::vector<TrajectoryStats> simulate_ensemble(double gamma_up, double gamma_down,
                                               double duration, std::uint64_t base_seed,
                                               std::size_t trajectories, unsigned threads,
                                               Level start) {
  // Validate up front; workers must not throw.
  require_rates(gamma_up, gamma_down);
  require_duration(duration);
  std::vector<TrajectoryStats> out(trajectories);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(trajectories, 1));

  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < trajectories; i += workers) {
      out[i] = simulate_jumps(gamma_up, gamma_down, duration, base_seed + i, start);
    }
  };
  if (workers <= 1) {
    run(0);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  pool.clear();
  return out;
}

}  // namespace rotcav
