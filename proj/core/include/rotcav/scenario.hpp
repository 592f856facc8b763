#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rotcav/scan.hpp"

namespace rotcav {

/// One computed quantity with the routine that produced it.
struct ReportEntry {
  std::string key;
  double value;
  std::string unit;
  std::string provenance;
};

struct ScenarioReport {
  std::string name;
  ParameterSet inputs;
  std::string frequency_convention;
  std::vector<ReportEntry> computed;
  std::vector<std::string> notes;

  /// Value of the entry with the given key; InvalidInput if absent.
  double value(std::string_view key) const;
  std::string to_json(int indent = 2) const;
};

inline constexpr std::string_view kScenarioNames[] = {"scenario1", "scenario2"};

/// Preset parameter sets:
///  scenario1: d = 1e-29 C m on every axis, V = 1e-14 m^3, Q = 1e7, R = 5e-8 m,
///             Omega = 5e9 rad/s, omega0 = 1e7 rad/s, omega_c = Omega - omega0.
///  scenario2: as scenario1 but omega0 = omega_c = 2.5e9 rad/s (Omega = 2 omega0).
/// UnknownScenario for any other name.
ParameterSet scenario_parameters(std::string_view name);

ScenarioReport run_scenario(std::string_view name);

}  // namespace rotcav
