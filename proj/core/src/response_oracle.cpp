#include "rotcav/response_oracle.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <fmt/format.h>

namespace rotcav {

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

// Integrates exp(-s) cos(r s) over [a, b] with `panels` equal sub-intervals.
// s is time in units of the cavity decay time Q/omega_c; r is the detuning in
// linewidths.
double damped_cosine(double r, double a, double b, int panels) {
  const auto f = [r](double s) { return std::exp(-s) * std::cos(r * s); };
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    sum += Rule::integrate(f, lo, i + 1 == panels ? b : lo + h);
  }
  return sum;
}

double refine(double r, double a, double b, const QuadratureParams& quad) {
  // Rounding floor: the integrand's envelope mass times a few ulps.
  const double noise = 1e-15 * (std::exp(-a) - std::exp(-b));
  int panels = quad.initial_panels;
  double prev = damped_cosine(r, a, b, panels);
  while (panels < quad.max_panels) {
    panels *= 2;
    const double next = damped_cosine(r, a, b, panels);
    if (std::abs(next - prev) <= quad.refinement_tol * std::abs(next) + noise) return next;
    prev = next;
  }
  throw Error(ErrorCode::QuadratureNotConverged,
              fmt::format("panel refinement over [{:.6g}, {:.6g}] decay times did not settle "
                          "within {} panels",
                          a, b, quad.max_panels));
}

}  // namespace

double response_oracle(const CavitySpec& cavity, double omega, const QuadratureParams& quad) {
  if (!(omega > 0.0)) {
    throw Error(ErrorCode::NonPositiveFrequency,
                fmt::format("response_oracle needs omega > 0 (got {})", omega));
  }
  if (quad.initial_panels < 1 || quad.max_panels < quad.initial_panels) {
    throw Error(ErrorCode::InvalidInput, "quadrature panel budget is empty");
  }
  const double decay_rate = cavity.linewidth();
  const double horizon = quad.truncation ? *quad.truncation * decay_rate : quad.decay_times;
  if (!(horizon > 0.0)) throw Error(ErrorCode::InvalidInput, "truncation must be positive");

  const double r = (omega - cavity.omega_c()) / decay_rate;
  const double body = refine(r, 0.0, horizon, quad);
  const double tail = refine(r, horizon, 2.0 * horizon, quad);
  if (std::abs(tail) > quad.truncation_tol * std::abs(body)) {
    throw Error(ErrorCode::QuadratureNotConverged,
                fmt::format("truncation at {:.4g} decay times leaves a tail of relative size "
                            "{:.3g}",
                            horizon, std::abs(tail / body)));
  }
  return body / (decay_rate * cavity.volume());
}

}  // namespace rotcav
