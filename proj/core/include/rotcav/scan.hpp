#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotcav/closed_forms.hpp"
#include "rotcav/phys_core.hpp"
#include "rotcav/spectral_engine.hpp"

namespace rotcav {

enum class EnvKind { Free, Cavity };

/// Flat, SI-unit parameter record. Names match the CLI flags and config keys.
struct ParameterSet {
  double omega0 = 0.0;
  double omega_rot = 0.0;
  double radius = 0.0;
  double d_rho = 0.0;
  double d_phi = 0.0;
  double d_z = 0.0;
  EnvKind env = EnvKind::Free;
  double omega_c = 0.0;
  double q = 0.0;
  double volume = 0.0;

  AtomSpec atom() const { return {omega0, d_rho, d_phi, d_z}; }
  MotionSpec motion() const { return {radius, omega_rot}; }
  Environment environment() const;

  /// Access by config/flag name ("omega0", "omega-rot", "d-z", ...).
  /// InvalidConfig for an unknown name.
  void set(std::string_view name, double value);
  double get(std::string_view name) const;

  bool operator==(const ParameterSet&) const = default;
};

inline constexpr std::string_view kParameterNames[] = {
    "omega0", "omega-rot", "radius", "d-rho", "d-phi", "d-z", "omega-c", "q", "volume"};

bool is_parameter_name(std::string_view name);
/// True for parameters that carry an angular frequency (scaled by 2 pi under --cyclic).
bool is_frequency_parameter(std::string_view name);

enum class GridKind { Linear, Logarithmic };

enum class OutputField { GammaDown, GammaUp, Channels, Diagnostics, PExcitedSteady };

std::string_view to_string(OutputField field);

struct ScanConfig {
  ParameterSet fixed;
  std::string sweep;
  double lo = 0.0;
  double hi = 0.0;
  GridKind grid = GridKind::Linear;
  std::size_t points = 0;
  std::vector<OutputField> outputs = {OutputField::GammaDown, OutputField::GammaUp,
                                      OutputField::Channels, OutputField::Diagnostics,
                                      OutputField::PExcitedSteady};

  bool wants(OutputField field) const;
  /// Sweep values in grid order.
  std::vector<double> grid_values() const;
  /// Throws InvalidConfig listing every offending field, including grid
  /// points that would violate a physical invariant.
  void validate() const;
};

struct OutputRecord {
  ParameterSet inputs;
  double sweep_value = 0.0;
  RateResult rates;
  std::optional<double> p_excited_steady;  // empty when both rates vanish
};

/// One evaluation of the engine from a flat parameter record.
OutputRecord evaluate_point(const ParameterSet& params, double sweep_value = 0.0);

/// Evaluates every grid point; records come back in grid order for any
/// number of worker threads (0 = hardware concurrency).
std::vector<OutputRecord> run_scan(const ScanConfig& config, unsigned threads = 0);

struct PeakSearchResult {
  double omega_c;       // numeric argmax
  double rate;          // rate at the argmax, s^-1
  double refined_step;  // grid step of the final refinement
};

/// Numeric argmax over the cavity tuning of the emission or excitation rate:
/// a uniform scan of `points` >= 100 followed by repeated zooms around the
/// best point until the step is below 1e-3 linewidths. WindowExcludesPeak
/// when the scan maximum sits on the window boundary.
PeakSearchResult find_peak_omega_c(const AtomSpec& atom, const MotionSpec& motion,
                                   const closed_forms::CavityTemplate& cavity, Direction direction,
                                   double lo, double hi, std::size_t points = 1001,
                                   const Constants& k = kCodata2018);

}  // namespace rotcav
