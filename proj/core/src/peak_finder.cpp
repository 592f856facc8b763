#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "rotcav/scan.hpp"

namespace rotcav {

namespace {

constexpr std::size_t kZoomPoints = 101;
constexpr int kMaxZooms = 64;
// Refinement stops once the step is this fraction of the local linewidth.
constexpr double kTargetLinewidths = 1e-3;

struct GridMax {
  std::size_t index;
  double x;
  double value;
};

template <class F>
GridMax scan_grid(F&& rate, double a, double b, std::size_t n) {
  GridMax best{0, a, -1.0};
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i + 1 == n ? b : a + h * static_cast<double>(i);
    const double v = rate(x);
    if (v > best.value) best = {i, x, v};
  }
  return best;
}

}  // namespace

PeakSearchResult find_peak_omega_c(const AtomSpec& atom, const MotionSpec& motion,
                                   const closed_forms::CavityTemplate& cavity, Direction direction,
                                   double lo, double hi, std::size_t points, const Constants& k) {
  if (!(lo > 0.0 && lo < hi && std::isfinite(hi))) {
    throw Error(ErrorCode::InvalidInput,
                fmt::format("peak window must satisfy 0 < lo < hi (got [{}, {}])", lo, hi));
  }
  if (points < 100) {
    throw Error(ErrorCode::InvalidInput, fmt::format("need >= 100 scan points (got {})", points));
  }
  require_subluminal(motion, k);

  auto rate = [&](double omega_c) {
    const auto r =
        transition_rates(atom, motion, CavitySpec(omega_c, cavity.q_factor, cavity.volume), k);
    return direction == Direction::Emission ? r.gamma_down : r.gamma_up;
  };

  auto best = scan_grid(rate, lo, hi, points);
  if (best.index == 0 || best.index + 1 == points) {
    throw Error(ErrorCode::WindowExcludesPeak,
                fmt::format("{} rate is largest at the window edge {:.9g} rad/s", to_string(direction),
                            best.x));
  }

  double step = (hi - lo) / static_cast<double>(points - 1);
  for (int zoom = 0; zoom < kMaxZooms; ++zoom) {
    const double target = kTargetLinewidths * best.x / cavity.q_factor;
    if (step <= target) break;
    const double a = std::max(lo, best.x - step);
    const double b = std::min(hi, best.x + step);
    const auto next = scan_grid(rate, a, b, kZoomPoints);
    const double next_step = (b - a) / static_cast<double>(kZoomPoints - 1);
    if (!(next_step < step)) break;  // resolution exhausted
    step = next_step;
    if (next.value >= best.value) best = next;
  }
  return {best.x, best.value, step};
}

}  // namespace rotcav
