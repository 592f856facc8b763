#include "rotcav/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>

#include <fmt/format.h>

namespace rotcav::closed_forms {

std::string_view to_string(PeakKind kind) {
  switch (kind) {
    case PeakKind::EmissionAtResonance: return "EmissionAtResonance";
    case PeakKind::EmissionOffResonant: return "EmissionOffResonant";
    case PeakKind::ExcitationHighRotation: return "ExcitationHighRotation";
    case PeakKind::ExcitationLowRotation: return "ExcitationLowRotation";
  }
  return "unknown";
}

std::string_view to_string(Coincidence c) {
  switch (c) {
    case Coincidence::None: return "None";
    case Coincidence::OmegaEq2Omega0: return "OmegaEq2Omega0";
    case Coincidence::OmegaEqOmega0: return "OmegaEqOmega0";
    case Coincidence::OmegaEqTwoThirdsOmega0: return "OmegaEqTwoThirdsOmega0";
  }
  return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;

double heaviside(double x) { return x > 0.0 ? 1.0 : 0.0; }

// Q^2 (omega - omega_c)^2 + omega_c^2, the common Lorentzian denominator.
double lorentz_den(double q, double omega, double omega_c) {
  const double d = omega - omega_c;
  return q * q * d * d + omega_c * omega_c;
}

void require_high_rotation(const AtomSpec& atom, const MotionSpec& motion) {
  if (!(motion.omega_rot() > atom.omega0())) {
    throw Error(ErrorCode::WrongRegime,
                fmt::format("needs Omega > omega0 (Omega = {:.6g}, omega0 = {:.6g})",
                            motion.omega_rot(), atom.omega0()));
  }
}

void require_low_rotation(const AtomSpec& atom, const MotionSpec& motion) {
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  if (!(rot > 0.5 * w0 && rot <= w0)) {
    throw Error(ErrorCode::WrongRegime,
                fmt::format("needs omega0/2 < Omega <= omega0 (Omega = {:.6g}, omega0 = {:.6g})",
                            rot, w0));
  }
}

// The peak formulas drop omega_c^2 against Q^2 * detuning^2 for every channel
// away from the tuned one; flag when that is no longer a 1e-6 effect.
void flag_strained(std::vector<Diagnostic>& out, double q, double omega_c,
                   std::initializer_list<double> detunings) {
  for (double d : detunings) {
    if (omega_c > 1e-3 * q * std::abs(d)) {
      out.push_back(Diagnostic::ApproximationStrained);
      return;
    }
  }
}

void flag_low_q(std::vector<Diagnostic>& out, double q) {
  if (q < CavitySpec::kLowQThreshold) out.push_back(Diagnostic::LowQ);
}

void require_separated(double separation, double linewidth, const char* where) {
  if (std::abs(separation) <= kCoincidenceLinewidths * linewidth) {
    throw Error(ErrorCode::CoincidentPeaks,
                fmt::format("{}: emission and excitation peaks are {:.3g} linewidths apart",
                            where, std::abs(separation) / linewidth));
  }
}

}  // namespace

double cavity_emission_rate(const AtomSpec& atom, const MotionSpec& motion,
                            const CavitySpec& cavity, const Constants& k) {
  require_subluminal(motion, k);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double wc = cavity.omega_c();
  const double q = cavity.q_factor();
  const double prefactor = wc * q / (6.0 * k.eps0 * k.hbar * cavity.volume());
  const double axial = 2.0 * w0 / lorentz_den(q, w0, wc) * atom.axial_sq();
  const double transverse =
      atom.transverse_sq() * ((w0 + rot) / lorentz_den(q, w0 + rot, wc) +
                              (w0 - rot) * heaviside(w0 - rot) / lorentz_den(q, w0 - rot, wc));
  return prefactor * (axial + transverse);
}

double cavity_excitation_rate_high(const AtomSpec& atom, const MotionSpec& motion,
                                   const CavitySpec& cavity, const Constants& k) {
  require_subluminal(motion, k);
  require_high_rotation(atom, motion);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double wc = cavity.omega_c();
  const double q = cavity.q_factor();
  return q * wc * (rot - w0) * atom.transverse_sq() /
         (6.0 * k.eps0 * k.hbar * cavity.volume() * lorentz_den(q, rot - w0, wc));
}

double cavity_excitation_rate_low(const AtomSpec& atom, const MotionSpec& motion,
                                  const CavitySpec& cavity, const Constants& k) {
  require_subluminal(motion, k);
  require_low_rotation(atom, motion);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double r = motion.radius();
  const double wc = cavity.omega_c();
  const double q = cavity.q_factor();
  const double sh = 2.0 * rot - w0;
  return q * r * r * wc * sh * sh * sh * atom.transverse_sq() /
         (40.0 * k.c * k.c * k.eps0 * k.hbar * cavity.volume() * lorentz_den(q, sh, wc));
}

FreeSpaceRates free_space_rates(const AtomSpec& atom, const MotionSpec& motion,
                                const Constants& k) {
  require_subluminal(motion, k);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double perp = atom.transverse_sq();
  const double axial = atom.axial_sq();
  const double c3 = k.c * k.c * k.c;
  const double eh = k.eps0 * k.hbar;

  FreeSpaceRates out{};
  if (rot <= w0) {
    out.gamma_down =
        w0 * w0 * w0 / (3.0 * kPi * eh * c3) * ((1.0 + 3.0 * rot * rot / (w0 * w0)) * perp + axial);
  } else {
    const double s = rot + w0;
    out.gamma_down = s * s * s / (6.0 * kPi * eh * c3) * (perp + 2.0 * w0 * w0 * w0 / (s * s * s) * axial);
  }

  if (rot > w0) {
    const double m = rot - w0;
    out.gamma_up = m * m * m / (6.0 * kPi * eh * c3) * perp;
  } else if (rot > 0.5 * w0) {
    const double sh = 2.0 * rot - w0;
    const double r = motion.radius();
    out.gamma_up = r * r * std::pow(sh, 5) / (40.0 * kPi * eh * c3 * k.c * k.c) * perp;
  } else if (!motion.is_inertial()) {
    out.diagnostics.push_back(Diagnostic::BelowLeadingOrder);
  }
  return out;
}

double inertial_resonant_peak(const AtomSpec& atom, const CavityTemplate& cavity,
                              const Constants& k) {
  return cavity.q_factor * atom.total_sq() / (3.0 * k.eps0 * k.hbar * cavity.volume);
}

double rotating_emission_at_resonance(const AtomSpec& atom, const MotionSpec& motion,
                                      const CavitySpec& cavity, const Constants& k) {
  require_subluminal(motion, k);
  const double w0 = atom.omega0();
  if (std::abs(cavity.omega_c() - w0) > 1e-9 * w0) {
    throw Error(ErrorCode::NotAtResonance,
                fmt::format("cavity at {:.9g} rad/s is not tuned to omega0 = {:.9g} rad/s",
                            cavity.omega_c(), w0));
  }
  const double rot = motion.omega_rot();
  const double q = cavity.q_factor();
  const double v = cavity.volume();
  const double eh = k.eps0 * k.hbar;
  const double bracket = w0 + rot + (w0 - rot) * heaviside(w0 - rot);
  return q / (3.0 * eh * v) * atom.axial_sq() +
         q * w0 * bracket / (6.0 * eh * v * (q * q * rot * rot + w0 * w0)) * atom.transverse_sq();
}

PeakReport off_resonant_emission_peak(const AtomSpec& atom, const CavitySpec& cavity,
                                      const Constants& k) {
  const double w0 = atom.omega0();
  const double wc = cavity.omega_c();
  const double q = cavity.q_factor();
  PeakReport report{
      .kind = PeakKind::EmissionOffResonant,
      .omega_c_star = wc,
      .rate_at_peak = q * atom.transverse_sq() / (6.0 * k.eps0 * k.hbar * cavity.volume()),
      .omega_rot_star = std::abs(wc - w0),
      .diagnostics = {},
  };
  flag_low_q(report.diagnostics, q);
  if (std::abs(w0 - wc) < kCoincidenceLinewidths * cavity.linewidth()) {
    report.diagnostics.push_back(Diagnostic::ApproximationStrained);
  } else {
    // Other channels sit |w0 - wc| and 2|w0 - wc| away from the tuned one.
    flag_strained(report.diagnostics, q, wc, {w0 - wc});
  }
  return report;
}

double inertial_off_resonant_emission(const AtomSpec& atom, const CavitySpec& cavity,
                                      const Constants& k) {
  const double w0 = atom.omega0();
  const double wc = cavity.omega_c();
  const double detuning = w0 - wc;
  if (std::abs(detuning) < 1e-12 * wc) {
    throw Error(ErrorCode::DivergentAtResonance,
                "off-resonant inertial emission diverges with the cavity on resonance");
  }
  return w0 * wc * atom.total_sq() /
         (3.0 * k.eps0 * k.hbar * cavity.volume() * cavity.q_factor() * detuning * detuning);
}

PeakReport excitation_peak_high_rotation(const AtomSpec& atom, const MotionSpec& motion,
                                         const CavityTemplate& cavity, const Constants& k) {
  require_subluminal(motion, k);
  require_high_rotation(atom, motion);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double wc = rot - w0;
  PeakReport report{
      .kind = PeakKind::ExcitationHighRotation,
      .omega_c_star = wc,
      .rate_at_peak = cavity.q_factor * atom.transverse_sq() /
                      (6.0 * k.eps0 * k.hbar * cavity.volume),
      .omega_rot_star = std::nullopt,
      .diagnostics = {},
  };
  flag_low_q(report.diagnostics, cavity.q_factor);
  if (std::abs(rot - 2.0 * w0) <= 3.0 * wc / cavity.q_factor) {
    report.diagnostics.push_back(Diagnostic::PeakOverlap);
  }
  return report;
}

PeakReport excitation_peak_low_rotation(const AtomSpec& atom, const MotionSpec& motion,
                                        const CavityTemplate& cavity, const Constants& k) {
  require_subluminal(motion, k);
  require_low_rotation(atom, motion);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double r = motion.radius();
  const double sh = 2.0 * rot - w0;
  PeakReport report{
      .kind = PeakKind::ExcitationLowRotation,
      .omega_c_star = sh,
      .rate_at_peak = cavity.q_factor * r * r * sh * sh * atom.transverse_sq() /
                      (40.0 * k.eps0 * k.hbar * cavity.volume * k.c * k.c),
      .omega_rot_star = std::nullopt,
      .diagnostics = {},
  };
  flag_low_q(report.diagnostics, cavity.q_factor);
  const double window = 3.0 * sh / cavity.q_factor;
  if (std::abs(sh - w0) <= window || std::abs(sh - (w0 - rot)) <= window) {
    report.diagnostics.push_back(Diagnostic::PeakOverlap);
  }
  return report;
}

EmissionParts emission_at_excitation_peak_high_parts(const AtomSpec& atom,
                                                     const MotionSpec& motion,
                                                     const CavityTemplate& cavity,
                                                     const Constants& k) {
  require_subluminal(motion, k);
  require_high_rotation(atom, motion);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double q = cavity.q_factor;
  require_separated(rot - 2.0 * w0, (rot - w0) / q, "emission at the high-rotation peak");

  const double common = (rot * rot - w0 * w0) /
                        (24.0 * k.eps0 * k.hbar * cavity.volume * q * w0 * w0);
  const double s = rot - 2.0 * w0;
  return {
      .transverse = common * atom.transverse_sq(),
      .axial = common * 8.0 * w0 * w0 * w0 / (s * s * (rot + w0)) * atom.axial_sq(),
  };
}

double emission_at_excitation_peak_high(const AtomSpec& atom, const MotionSpec& motion,
                                        const CavityTemplate& cavity, const Constants& k) {
  return emission_at_excitation_peak_high_parts(atom, motion, cavity, k).total();
}

EmissionParts emission_at_excitation_peak_low_parts(const AtomSpec& atom,
                                                    const MotionSpec& motion,
                                                    const CavityTemplate& cavity,
                                                    const Constants& k) {
  require_subluminal(motion, k);
  require_low_rotation(atom, motion);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double q = cavity.q_factor;
  const double sh = 2.0 * rot - w0;
  const double linewidth = sh / q;
  // Tuned to 2 Omega - omega0: the axial peak (omega0) meets it at Omega = omega0,
  // the lower transverse peak (omega0 - Omega) at Omega = 2 omega0 / 3.
  require_separated(sh - w0, linewidth, "emission at the low-rotation peak");
  require_separated(sh - (w0 - rot), linewidth, "emission at the low-rotation peak");

  const double common = sh / (6.0 * k.eps0 * k.hbar * cavity.volume * q);
  const double a = rot - 2.0 * w0;
  const double b = 3.0 * rot - 2.0 * w0;
  const double num = 4.0 * rot * rot * rot + w0 * (rot * rot - 8.0 * w0 * rot + 4.0 * w0 * w0);
  const double m = rot - w0;
  return {
      .transverse = common * 2.0 * num / (a * a * b * b) * atom.transverse_sq(),
      .axial = common * w0 / (2.0 * m * m) * atom.axial_sq(),
  };
}

double emission_at_excitation_peak_low(const AtomSpec& atom, const MotionSpec& motion,
                                       const CavityTemplate& cavity, const Constants& k) {
  return emission_at_excitation_peak_low_parts(atom, motion, cavity, k).total();
}

EnhancementFactor enhancement_factor(const AtomSpec& atom, const MotionSpec& motion,
                                     const CavityTemplate& cavity, EnhancementKind which,
                                     const Constants& k) {
  require_subluminal(motion, k);
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  double omega = 0.0;
  switch (which) {
    case EnhancementKind::EmissionLow:
      omega = w0;
      break;
    case EnhancementKind::EmissionHigh:
      omega = rot + w0;
      break;
    case EnhancementKind::ExcitationHigh:
      require_high_rotation(atom, motion);
      omega = rot - w0;
      break;
    case EnhancementKind::ExcitationLow:
      require_low_rotation(atom, motion);
      omega = 2.0 * rot - w0;
      break;
  }
  const double nominal = cavity.q_factor * k.c * k.c * k.c / (cavity.volume * omega * omega * omega);
  const Environment tuned = CavitySpec(omega, cavity.q_factor, cavity.volume);
  const double exact = response(tuned, omega, k) / response(FreeSpace{}, omega, k);
  return {omega, nominal, exact};
}

InversionRatioAudit inversion_ratio_audit(const AtomSpec& atom, const MotionSpec& motion,
                                          const CavityTemplate& cavity, const Constants& k) {
  const auto peak = excitation_peak_high_rotation(atom, motion, cavity, k);
  const auto emission = emission_at_excitation_peak_high_parts(atom, motion, cavity, k);
  const double q = cavity.q_factor;
  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double ratio = rot / w0;
  return {
      .quotient = peak.rate_at_peak / emission.transverse,
      .exact_form = 4.0 * q * q * w0 * w0 / (rot * rot - w0 * w0),
      .approx_form = q * q / (ratio * ratio - 1.0),
  };
}

CoincidenceClass classify_coincidence(const AtomSpec& atom, const MotionSpec& motion, double tol) {
  if (!(tol > 0.0 && tol < 0.1)) {
    throw Error(ErrorCode::InvalidInput, fmt::format("tolerance must lie in (0, 0.1), got {}", tol));
  }
  const double ratio = motion.omega_rot() / atom.omega0();
  const std::pair<double, Coincidence> targets[] = {
      {2.0, Coincidence::OmegaEq2Omega0},
      {1.0, Coincidence::OmegaEqOmega0},
      {2.0 / 3.0, Coincidence::OmegaEqTwoThirdsOmega0},
  };
  for (const auto& [r, variant] : targets) {
    if (std::abs(ratio - r) <= tol * r) return {variant, tol};
  }
  return {Coincidence::None, tol};
}

}  // namespace rotcav::closed_forms
