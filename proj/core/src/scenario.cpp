#include "rotcav/scenario.hpp"

#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "rotcav/closed_forms.hpp"
#include "rotcav/dynamics.hpp"
#include "rotcav/emit.hpp"

namespace rotcav {

namespace cf = closed_forms;

namespace {

constexpr double kDipole = 1e-29;
constexpr double kVolume = 1e-14;
constexpr double kQ = 1e7;
constexpr double kRadius = 5e-8;
constexpr double kOmegaRot = 5e9;

constexpr std::string_view kConvention =
    "angular frequencies in rad/s; a quoted '5 GHz' is read as 5e9 rad/s, which reproduces the "
    "quoted free-space excitation magnitude of order 1e-11 s^-1";

ParameterSet base_parameters() {
  ParameterSet p;
  p.omega_rot = kOmegaRot;
  p.radius = kRadius;
  p.d_rho = p.d_phi = p.d_z = kDipole;
  p.env = EnvKind::Cavity;
  p.q = kQ;
  p.volume = kVolume;
  return p;
}

struct Builder {
  ScenarioReport& report;
  void add(std::string key, double value, std::string unit, std::string provenance) {
    report.computed.push_back({std::move(key), value, std::move(unit), std::move(provenance)});
  }
};

void add_dynamics(Builder& b, double up, double down) {
  const auto ss = steady_state(up, down);
  b.add("p_excited_steady", ss.p_excited, "", "dynamics.steady_state");
  b.add("one_minus_p_excited_steady", down / (up + down), "", "dynamics.steady_state");
  b.add("relaxation_time", relaxation_time(up, down), "s", "dynamics.relaxation_time");
  b.add("expected_jumps_per_s", expected_jump_rate(up, down), "s^-1",
        "dynamics.expected_jump_rate");
}

ScenarioReport scenario1() {
  ScenarioReport report;
  report.name = "scenario1";
  report.inputs = scenario_parameters("scenario1");
  Builder b{report};

  const auto& p = report.inputs;
  const auto atom = p.atom();
  const auto motion = p.motion();
  const cf::CavityTemplate tmpl{p.q, p.volume};

  const auto cavity = transition_rates(atom, motion, p.environment());
  const auto free = transition_rates(atom, motion, FreeSpace{});
  const auto peak = cf::excitation_peak_high_rotation(atom, motion, tmpl);
  const double emission_cf = cf::emission_at_excitation_peak_high(atom, motion, tmpl);
  const auto free_cf = cf::free_space_rates(atom, motion);
  const auto enh = cf::enhancement_factor(atom, motion, tmpl, cf::EnhancementKind::ExcitationHigh);
  const auto audit = cf::inversion_ratio_audit(atom, motion, tmpl);

  b.add("cavity_gamma_up", cavity.gamma_up, "s^-1", "spectral_engine.transition_rates(cavity)");
  b.add("cavity_gamma_down", cavity.gamma_down, "s^-1", "spectral_engine.transition_rates(cavity)");
  b.add("excitation_peak_closed_form", peak.rate_at_peak, "s^-1",
        "closed_forms.excitation_peak_high_rotation");
  b.add("excitation_peak_omega_c", peak.omega_c_star, "rad/s",
        "closed_forms.excitation_peak_high_rotation");
  b.add("emission_at_peak_closed_form", emission_cf, "s^-1",
        "closed_forms.emission_at_excitation_peak_high");
  b.add("free_gamma_up", free.gamma_up, "s^-1", "spectral_engine.transition_rates(free)");
  b.add("free_gamma_up_closed_form", free_cf.gamma_up, "s^-1", "closed_forms.free_space_rates");
  b.add("free_gamma_down", free.gamma_down, "s^-1", "spectral_engine.transition_rates(free)");
  b.add("log10_cavity_over_free_gamma_up", std::log10(cavity.gamma_up / free.gamma_up), "decades",
        "ratio of spectral_engine rates");
  b.add("log10_gamma_up_over_gamma_down", std::log10(cavity.gamma_up / cavity.gamma_down),
        "decades", "ratio of spectral_engine rates");
  b.add("enhancement_nominal", enh.nominal, "", "closed_forms.enhancement_factor (Q c^3/(V w^3))");
  b.add("enhancement_exact", enh.exact, "", "closed_forms.enhancement_factor (response ratio)");
  b.add("inversion_ratio_quotient", audit.quotient, "",
        "closed_forms.inversion_ratio_audit (peak / transverse emission)");
  b.add("inversion_ratio_exact_form", audit.exact_form, "",
        "closed_forms.inversion_ratio_audit (4 Q^2 w0^2 / (W^2 - w0^2))");
  b.add("inversion_ratio_approx_form", audit.approx_form, "",
        "closed_forms.inversion_ratio_audit (Q^2 / ((W/w0)^2 - 1))");
  b.add("inversion_ratio_approx_over_exact", audit.approx_over_exact(), "",
        "closed_forms.inversion_ratio_audit");
  add_dynamics(b, cavity.gamma_up, cavity.gamma_down);

  report.notes.push_back(fmt::format(
      "the approximate inversion ratio Q^2/((Omega/omega0)^2-1) is {:.6g} times the exact "
      "quotient 4 Q^2 omega0^2/(Omega^2-omega0^2)",
      audit.approx_over_exact()));
  if (!cavity.diagnostics.empty()) {
    report.notes.push_back("flags: " + join_diagnostics(cavity.diagnostics));
  }
  return report;
}

ScenarioReport scenario2() {
  ScenarioReport report;
  report.name = "scenario2";
  report.inputs = scenario_parameters("scenario2");
  Builder b{report};

  const auto& p = report.inputs;
  const auto atom = p.atom();
  const auto motion = p.motion();
  const cf::CavityTemplate tmpl{p.q, p.volume};
  const CavitySpec cavity_spec(p.omega_c, p.q, p.volume);

  const auto cavity = transition_rates(atom, motion, cavity_spec);
  const auto free = transition_rates(atom, motion, FreeSpace{});
  const double emission_cf = cf::rotating_emission_at_resonance(atom, motion, cavity_spec);
  const auto peak = cf::excitation_peak_high_rotation(atom, motion, tmpl);
  const auto coincidence = cf::classify_coincidence(atom, motion, 1e-3);

  b.add("cavity_gamma_down", cavity.gamma_down, "s^-1", "spectral_engine.transition_rates(cavity)");
  b.add("cavity_gamma_up", cavity.gamma_up, "s^-1", "spectral_engine.transition_rates(cavity)");
  b.add("emission_at_resonance_closed_form", emission_cf, "s^-1",
        "closed_forms.rotating_emission_at_resonance");
  b.add("excitation_peak_closed_form", peak.rate_at_peak, "s^-1",
        "closed_forms.excitation_peak_high_rotation");
  b.add("up_down_relative_difference",
        std::abs(cavity.gamma_up - cavity.gamma_down) / std::max(cavity.gamma_up, cavity.gamma_down),
        "", "ratio of spectral_engine rates");
  b.add("free_gamma_up", free.gamma_up, "s^-1", "spectral_engine.transition_rates(free)");
  b.add("free_gamma_down", free.gamma_down, "s^-1", "spectral_engine.transition_rates(free)");
  add_dynamics(b, cavity.gamma_up, cavity.gamma_down);

  report.notes.push_back(fmt::format("coincidence class: {}", cf::to_string(coincidence.variant)));
  return report;
}

}  // namespace

ParameterSet scenario_parameters(std::string_view name) {
  ParameterSet p = base_parameters();
  if (name == "scenario1") {
    p.omega0 = 1e7;
    p.omega_c = p.omega_rot - p.omega0;
  } else if (name == "scenario2") {
    p.omega0 = 2.5e9;
    p.omega_c = 2.5e9;
  } else {
    throw Error(ErrorCode::UnknownScenario,
                fmt::format("'{}' (expected scenario1 or scenario2)", name));
  }
  return p;
}

ScenarioReport run_scenario(std::string_view name) {
  (void)scenario_parameters(name);  // rejects unknown names
  ScenarioReport report = name == "scenario2" ? scenario2() : scenario1();
  report.frequency_convention = std::string(kConvention);
  return report;
}

double ScenarioReport::value(std::string_view key) const {
  for (const auto& e : computed) {
    if (e.key == key) return e.value;
  }
  throw Error(ErrorCode::InvalidInput, fmt::format("report has no entry '{}'", key));
}

std::string ScenarioReport::to_json(int indent) const {
  nlohmann::json j;
  j["scenario"] = name;
  j["frequency_convention"] = frequency_convention;
  nlohmann::json in;
  for (auto n : kParameterNames) in[std::string(n)] = inputs.get(n);
  in["env"] = inputs.env == EnvKind::Cavity ? "cavity" : "free";
  j["inputs"] = in;
  auto& arr = j["computed"] = nlohmann::json::array();
  for (const auto& e : computed) {
    arr.push_back({{"key", e.key}, {"value", e.value}, {"unit", e.unit}, {"provenance", e.provenance}});
  }
  j["notes"] = notes;
  return j.dump(indent);
}

}  // namespace rotcav
