#include "rotcav/phys_core.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace rotcav {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SuperluminalOrbit: return "SuperluminalOrbit";
    case ErrorCode::NonPositiveFrequency: return "NonPositiveFrequency";
    case ErrorCode::NotAtResonance: return "NotAtResonance";
    case ErrorCode::DivergentAtResonance: return "DivergentAtResonance";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::CoincidentPeaks: return "CoincidentPeaks";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::BothRatesZero: return "BothRatesZero";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::WindowExcludesPeak: return "WindowExcludesPeak";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

namespace {

void require(bool ok, const char* what, double value) {
  if (!ok) throw Error(ErrorCode::InvalidInput, fmt::format("{} (got {})", what, value));
}

}  // namespace

AtomSpec::AtomSpec(double omega0, double d_rho, double d_phi, double d_z)
    : omega0_(omega0), d_rho_(d_rho), d_phi_(d_phi), d_z_(d_z) {
  require(std::isfinite(omega0) && omega0 > 0.0, "omega0 must be a positive finite frequency",
          omega0);
  require(std::isfinite(d_rho), "d_rho must be finite", d_rho);
  require(std::isfinite(d_phi), "d_phi must be finite", d_phi);
  require(std::isfinite(d_z), "d_z must be finite", d_z);
}

MotionSpec::MotionSpec(double radius, double omega_rot) : radius_(radius), omega_rot_(omega_rot) {
  require(std::isfinite(radius) && radius >= 0.0, "radius must be finite and >= 0", radius);
  require(std::isfinite(omega_rot) && omega_rot >= 0.0, "omega_rot must be finite and >= 0",
          omega_rot);
}

CavitySpec::CavitySpec(double omega_c, double q_factor, double volume)
    : omega_c_(omega_c), q_factor_(q_factor), volume_(volume) {
  require(std::isfinite(omega_c) && omega_c > 0.0, "omega_c must be a positive finite frequency",
          omega_c);
  require(std::isfinite(q_factor) && q_factor > 1.0, "Q must be finite and > 1", q_factor);
  require(std::isfinite(volume) && volume > 0.0, "volume must be finite and > 0", volume);
}

void require_subluminal(const MotionSpec& motion, const Constants& k) {
  if (!(motion.speed() < k.c)) {
    throw Error(ErrorCode::SuperluminalOrbit,
                fmt::format("orbital speed R*Omega = {:.6g} m/s is not below c", motion.speed()));
  }
}

double lorentz_gamma(const MotionSpec& motion, const Constants& k) {
  require_subluminal(motion, k);
  const double beta = motion.speed() / k.c;
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

double lab_frame_frequency(const AtomSpec& atom, const MotionSpec& motion, const Constants& k) {
  require_subluminal(motion, k);
  const double beta = motion.speed() / k.c;
  return atom.omega0() * std::sqrt(1.0 - beta * beta);
}

double dos_lorentzian(const CavitySpec& cavity, double omega_k) {
  const double width = cavity.linewidth();
  const double detuning = omega_k - cavity.omega_c();
  return width / (std::numbers::pi * (width * width + detuning * detuning));
}

double response(const Environment& env, double omega, const Constants& k) {
  if (!(omega > 0.0)) {
    throw Error(ErrorCode::NonPositiveFrequency,
                fmt::format("response needs omega > 0 (got {})", omega));
  }
  if (const auto* cavity = std::get_if<CavitySpec>(&env)) {
    const double q = cavity->q_factor();
    const double wc = cavity->omega_c();
    const double detuning = omega - wc;
    return (q * wc / cavity->volume()) / (q * q * detuning * detuning + wc * wc);
  }
  return omega * omega / (std::numbers::pi * k.c * k.c * k.c);
}

}  // namespace rotcav
