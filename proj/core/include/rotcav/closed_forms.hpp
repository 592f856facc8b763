#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rotcav/phys_core.hpp"
#include "rotcav/spectral_engine.hpp"

// Direct transcriptions of the closed-form rate expressions for a rotating
// two-level atom. These are written independently of the channel engine so
// the two can serve as oracles for each other.
namespace rotcav::closed_forms {

/// Cavity parameters with the normal-mode frequency left free (it is set by
/// the peak being evaluated).
struct CavityTemplate {
  double q_factor;
  double volume;
};

enum class PeakKind {
  EmissionAtResonance,
  EmissionOffResonant,
  ExcitationHighRotation,
  ExcitationLowRotation,
};

std::string_view to_string(PeakKind kind);

struct PeakReport {
  PeakKind kind;
  double omega_c_star;  // rad/s, cavity tuning at the peak
  double rate_at_peak;  // s^-1
  /// For peaks located in Omega at fixed omega_c (the off-resonant emission
  /// peak), the rotation speed at which the peak occurs.
  std::optional<double> omega_rot_star;
  std::vector<Diagnostic> diagnostics;
};

// ---- Full leading-order rates -------------------------------------------

/// Cavity emission rate, all three leading channels.
double cavity_emission_rate(const AtomSpec& atom, const MotionSpec& motion,
                            const CavitySpec& cavity, const Constants& k = kCodata2018);

/// Cavity excitation rate for Omega > omega0 (counter-rotating term only).
/// WrongRegime otherwise.
double cavity_excitation_rate_high(const AtomSpec& atom, const MotionSpec& motion,
                                   const CavitySpec& cavity, const Constants& k = kCodata2018);

/// Cavity excitation rate for omega0/2 < Omega <= omega0. WrongRegime otherwise.
double cavity_excitation_rate_low(const AtomSpec& atom, const MotionSpec& motion,
                                  const CavitySpec& cavity, const Constants& k = kCodata2018);

struct FreeSpaceRates {
  double gamma_down;
  double gamma_up;
  std::vector<Diagnostic> diagnostics;
};

/// Free-space rates, piecewise in Omega. For Omega <= omega0/2 the excitation
/// is reported as 0 and flagged BelowLeadingOrder (when the atom moves).
FreeSpaceRates free_space_rates(const AtomSpec& atom, const MotionSpec& motion,
                                const Constants& k = kCodata2018);

// ---- Peaks and special cases --------------------------------------------

/// Inertial atom in a cavity tuned to omega0: Q |d|^2 / (3 eps0 hbar V).
double inertial_resonant_peak(const AtomSpec& atom, const CavityTemplate& cavity,
                              const Constants& k = kCodata2018);

/// Emission of a rotating atom with the cavity tuned to omega0. The step
/// function at Omega == omega0 is taken as 0; its coefficient vanishes there.
/// NotAtResonance unless omega_c equals omega0 to relative 1e-9.
double rotating_emission_at_resonance(const AtomSpec& atom, const MotionSpec& motion,
                                      const CavitySpec& cavity,
                                      const Constants& k = kCodata2018);

/// Peak in Omega of the emission rate for a detuned cavity, reached at
/// Omega = |omega_c - omega0|.
PeakReport off_resonant_emission_peak(const AtomSpec& atom, const CavitySpec& cavity,
                                      const Constants& k = kCodata2018);

/// Inertial atom in a detuned cavity. DivergentAtResonance when
/// |omega0 - omega_c| < 1e-12 omega_c.
double inertial_off_resonant_emission(const AtomSpec& atom, const CavitySpec& cavity,
                                      const Constants& k = kCodata2018);

/// Excitation peak for Omega > omega0, at omega_c = Omega - omega0.
PeakReport excitation_peak_high_rotation(const AtomSpec& atom, const MotionSpec& motion,
                                         const CavityTemplate& cavity,
                                         const Constants& k = kCodata2018);

/// Excitation peak for omega0/2 < Omega <= omega0, at omega_c = 2 Omega - omega0.
PeakReport excitation_peak_low_rotation(const AtomSpec& atom, const MotionSpec& motion,
                                        const CavityTemplate& cavity,
                                        const Constants& k = kCodata2018);

/// Transverse and axial pieces of an emission rate.
struct EmissionParts {
  double transverse;
  double axial;
  double total() const { return transverse + axial; }
};

/// Emission with the cavity sitting on the high-rotation excitation peak
/// (omega_c = Omega - omega0). WrongRegime for Omega <= omega0;
/// CoincidentPeaks when Omega is within 10 linewidths of 2 omega0.
EmissionParts emission_at_excitation_peak_high_parts(const AtomSpec& atom,
                                                     const MotionSpec& motion,
                                                     const CavityTemplate& cavity,
                                                     const Constants& k = kCodata2018);
double emission_at_excitation_peak_high(const AtomSpec& atom, const MotionSpec& motion,
                                        const CavityTemplate& cavity,
                                        const Constants& k = kCodata2018);

/// Emission with the cavity on the low-rotation excitation peak
/// (omega_c = 2 Omega - omega0). CoincidentPeaks near Omega = omega0 or 2 omega0/3.
EmissionParts emission_at_excitation_peak_low_parts(const AtomSpec& atom,
                                                    const MotionSpec& motion,
                                                    const CavityTemplate& cavity,
                                                    const Constants& k = kCodata2018);
double emission_at_excitation_peak_low(const AtomSpec& atom, const MotionSpec& motion,
                                       const CavityTemplate& cavity,
                                       const Constants& k = kCodata2018);

// ---- Enhancement, inversion, coincidences -------------------------------

enum class EnhancementKind {
  EmissionLow,     // omega = omega0
  EmissionHigh,    // omega = Omega + omega0
  ExcitationHigh,  // omega = Omega - omega0, needs Omega > omega0
  ExcitationLow,   // omega = 2 Omega - omega0, needs omega0/2 < Omega <= omega0
};

struct EnhancementFactor {
  double frequency;  // channel frequency the cavity is tuned to
  double nominal;    // Q c^3 / (V omega^3)
  double exact;      // cavity / free-space response at the peak, = pi * nominal
};

EnhancementFactor enhancement_factor(const AtomSpec& atom, const MotionSpec& motion,
                                     const CavityTemplate& cavity, EnhancementKind which,
                                     const Constants& k = kCodata2018);

/// Excitation-to-emission ratio at the high-rotation excitation peak,
/// transverse parts only.
struct InversionRatioAudit {
  double quotient;     // excitation peak / transverse part of emission at that tuning
  double exact_form;   // 4 Q^2 omega0^2 / (Omega^2 - omega0^2)
  double approx_form;  // Q^2 / ((Omega/omega0)^2 - 1), the commonly quoted estimate
  double approx_over_exact() const { return approx_form / exact_form; }
};

InversionRatioAudit inversion_ratio_audit(const AtomSpec& atom, const MotionSpec& motion,
                                          const CavityTemplate& cavity,
                                          const Constants& k = kCodata2018);

enum class Coincidence { None, OmegaEq2Omega0, OmegaEqOmega0, OmegaEqTwoThirdsOmega0 };

std::string_view to_string(Coincidence c);

struct CoincidenceClass {
  Coincidence variant;
  double tolerance;
};

/// Rotation speeds at which an emission and an excitation peak share a
/// cavity tuning. `tol` must lie in (0, 0.1).
CoincidenceClass classify_coincidence(const AtomSpec& atom, const MotionSpec& motion,
                                      double tol = 1e-3);

/// Separation, in cavity linewidths, below which two peaks count as coincident.
inline constexpr double kCoincidenceLinewidths = 10.0;

}  // namespace rotcav::closed_forms
