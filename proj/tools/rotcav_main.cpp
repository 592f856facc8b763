// rotcav: transition rates of a rotating two-level atom in free space or in a
// Lorentzian cavity.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical non-convergence.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rotcav/closed_forms.hpp"
#include "rotcav/dynamics.hpp"
#include "rotcav/emit.hpp"
#include "rotcav/response_oracle.hpp"
#include "rotcav/scan.hpp"
#include "rotcav/scan_config.hpp"
#include "rotcav/scenario.hpp"

namespace {

using nlohmann::json;
using namespace rotcav;
namespace cf = rotcav::closed_forms;

constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

struct AtomFlags {
  double omega0 = 0.0;
  double omega_rot = 0.0;
  double radius = 0.0;
  double d_rho = 0.0;
  double d_phi = 0.0;
  double d_z = 0.0;
  bool cyclic = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--omega0", omega0, "proper transition frequency (rad/s)")->required();
    cmd.add_option("--omega-rot", omega_rot, "rotational angular velocity (rad/s)");
    cmd.add_option("--radius", radius, "orbit radius (m)");
    cmd.add_option("--d-rho", d_rho, "radial dipole element (C m)");
    cmd.add_option("--d-phi", d_phi, "azimuthal dipole element (C m)");
    cmd.add_option("--d-z", d_z, "axial dipole element (C m)");
    cmd.add_flag("--cyclic", cyclic, "read frequencies as Hz and convert to rad/s");
  }
};

struct CavityFlags {
  std::optional<double> omega_c;
  std::optional<double> q;
  std::optional<double> volume;

  void attach(CLI::App& cmd, bool q_required) {
    cmd.add_option("--omega-c", omega_c, "cavity normal-mode frequency (rad/s)");
    auto* qo = cmd.add_option("--q", q, "cavity quality factor");
    auto* vo = cmd.add_option("--volume", volume, "cavity volume (m^3)");
    if (q_required) {
      qo->required();
      vo->required();
    }
  }
};

ParameterSet to_params(const AtomFlags& a, const CavityFlags& c, bool cavity) {
  const double scale = a.cyclic ? 2.0 * std::numbers::pi : 1.0;
  ParameterSet p;
  p.omega0 = a.omega0 * scale;
  p.omega_rot = a.omega_rot * scale;
  p.radius = a.radius;
  p.d_rho = a.d_rho;
  p.d_phi = a.d_phi;
  p.d_z = a.d_z;
  p.env = cavity ? EnvKind::Cavity : EnvKind::Free;
  if (c.omega_c) p.omega_c = *c.omega_c * scale;
  if (c.q) p.q = *c.q;
  if (c.volume) p.volume = *c.volume;
  return p;
}

int cmd_rates(const AtomFlags& atom_flags, const CavityFlags& cav, const std::string& env,
              bool oracle, double oracle_decay_times) {
  const bool cavity = env == "cavity";
  if (cavity && !(cav.omega_c && cav.q && cav.volume)) {
    throw Error(ErrorCode::InvalidInput, "--env cavity needs --omega-c, --q and --volume");
  }
  const auto params = to_params(atom_flags, cav, cavity);
  const auto result = transition_rates(params.atom(), params.motion(), params.environment());
  json out = json::parse(rates_to_json(params, result));
  if (oracle) {
    if (!cavity) throw Error(ErrorCode::InvalidInput, "--oracle needs --env cavity");
    const CavitySpec mode(params.omega_c, params.q, params.volume);
    QuadratureParams quad;
    quad.decay_times = oracle_decay_times;
    auto& checks = out["oracle"] = json::array();
    // The time-domain quadrature is only meaningful near the resonance; far
    // channels are listed without a numeric value.
    constexpr double kOracleRangeLinewidths = 100.0;
    for (const auto& cr : result.channels) {
      const double direct = response(mode, cr.channel.frequency);
      json check{{"label", std::string(to_string(cr.channel.label))}, {"response", direct}};
      const double detuning = std::abs(cr.channel.frequency - mode.omega_c()) / mode.linewidth();
      if (detuning <= kOracleRangeLinewidths) {
        const double numeric = response_oracle(mode, cr.channel.frequency, quad);
        check["response_quadrature"] = numeric;
        check["relative_difference"] = std::abs(numeric - direct) / direct;
      } else {
        check["skipped"] = true;
        check["detuning_linewidths"] = detuning;
      }
      checks.push_back(std::move(check));
    }
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

json peak_json(const cf::PeakReport& r) {
  json j{{"kind", std::string(cf::to_string(r.kind))},
         {"omega_c_star", r.omega_c_star},
         {"rate_at_peak", r.rate_at_peak}};
  if (r.omega_rot_star) j["omega_rot_star"] = *r.omega_rot_star;
  json d = json::array();
  for (auto x : r.diagnostics) d.push_back(std::string(to_string(x)));
  j["diagnostics"] = d;
  return j;
}

// Runs `f`, storing its value under `key` or the error text under `key`_error.
template <class F>
void try_add(json& j, const std::string& key, F&& f) {
  try {
    j[key] = f();
  } catch (const Error& e) {
    j[key + "_error"] = e.what();
  }
}

json numeric_peak(const ParameterSet& p, Direction dir, double omega_c_star) {
  const double half = 200.0 * omega_c_star / p.q;
  const auto found = find_peak_omega_c(p.atom(), p.motion(), {p.q, p.volume}, dir,
                                       omega_c_star - half, omega_c_star + half, 1001);
  return {{"omega_c", found.omega_c},
          {"rate", found.rate},
          {"refined_step", found.refined_step},
          {"offset_in_steps", (found.omega_c - omega_c_star) / found.refined_step}};
}

int cmd_peaks(const AtomFlags& atom_flags, const CavityFlags& cav, bool numeric) {
  const auto p = to_params(atom_flags, cav, false);
  const auto atom = p.atom();
  const auto motion = p.motion();
  require_subluminal(motion);
  const cf::CavityTemplate tmpl{*cav.q, *cav.volume};
  (void)CavitySpec(atom.omega0(), tmpl.q_factor, tmpl.volume);  // validates Q and V

  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  json out;
  out["inputs"] = {{"omega0", w0}, {"omega_rot", rot}, {"radius", p.radius}, {"d_rho", p.d_rho},
                   {"d_phi", p.d_phi}, {"d_z", p.d_z}, {"q", tmpl.q_factor}, {"volume", tmpl.volume}};
  out["coincidence"] = std::string(cf::to_string(cf::classify_coincidence(atom, motion).variant));

  auto& peaks = out["peaks"] = json::array();
  {
    json j{{"kind", "EmissionAtResonance"}, {"omega_c_star", w0}};
    j["inertial_rate"] = cf::inertial_resonant_peak(atom, tmpl);
    try_add(j, "rate_at_peak", [&] {
      return cf::rotating_emission_at_resonance(atom, motion, CavitySpec(w0, tmpl.q_factor, tmpl.volume));
    });
    const auto enh = cf::enhancement_factor(atom, motion, tmpl, cf::EnhancementKind::EmissionLow);
    j["enhancement"] = {{"nominal", enh.nominal}, {"exact", enh.exact}};
    if (numeric) try_add(j, "numeric", [&] {
      auto q = p;
      q.q = tmpl.q_factor;
      q.volume = tmpl.volume;
      return numeric_peak(q, Direction::Emission, w0);
    });
    peaks.push_back(j);
  }
  if (cav.omega_c) {
    const CavitySpec mode(p.omega_c, tmpl.q_factor, tmpl.volume);
    auto j = peak_json(cf::off_resonant_emission_peak(atom, mode));
    try_add(j, "inertial_rate", [&] { return cf::inertial_off_resonant_emission(atom, mode); });
    peaks.push_back(j);
  }
  if (rot > w0) {
    auto j = peak_json(cf::excitation_peak_high_rotation(atom, motion, tmpl));
    try_add(j, "emission_at_peak", [&] { return cf::emission_at_excitation_peak_high(atom, motion, tmpl); });
    const auto enh = cf::enhancement_factor(atom, motion, tmpl, cf::EnhancementKind::ExcitationHigh);
    j["enhancement"] = {{"nominal", enh.nominal}, {"exact", enh.exact}};
    try_add(j, "inversion_ratio", [&] {
      const auto a = cf::inversion_ratio_audit(atom, motion, tmpl);
      return json{{"quotient", a.quotient},
                  {"exact_form", a.exact_form},
                  {"approx_form", a.approx_form},
                  {"approx_over_exact", a.approx_over_exact()}};
    });
    if (numeric) try_add(j, "numeric", [&] {
      auto q = p;
      q.q = tmpl.q_factor;
      q.volume = tmpl.volume;
      return numeric_peak(q, Direction::Excitation, rot - w0);
    });
    peaks.push_back(j);
  } else if (rot > 0.5 * w0) {
    auto j = peak_json(cf::excitation_peak_low_rotation(atom, motion, tmpl));
    try_add(j, "emission_at_peak", [&] { return cf::emission_at_excitation_peak_low(atom, motion, tmpl); });
    const auto enh = cf::enhancement_factor(atom, motion, tmpl, cf::EnhancementKind::ExcitationLow);
    j["enhancement"] = {{"nominal", enh.nominal}, {"exact", enh.exact}};
    peaks.push_back(j);
  }
  const auto free = cf::free_space_rates(atom, motion);
  out["free_space"] = {{"gamma_down", free.gamma_down}, {"gamma_up", free.gamma_up}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_dynamics(double up, double down, double duration, std::uint64_t seed, std::size_t n,
                 unsigned threads, const std::string& initial) {
  const Level start = initial == "excited" ? Level::Excited : Level::Ground;
  const auto runs = simulate_ensemble(up, down, duration, seed, n, threads, start);

  json out;
  out["gamma_up"] = up;
  out["gamma_down"] = down;
  out["p_excited_steady"] = steady_state(up, down).p_excited;
  out["relaxation_time_s"] = relaxation_time(up, down);
  out["expected_jumps_per_s"] = expected_jump_rate(up, down);
  out["rng_algorithm"] = std::string(kJumpRngAlgorithm);

  double sum = 0.0, sum_sq = 0.0;
  std::uint64_t jumps = 0;
  auto& trajs = out["trajectories"] = json::array();
  for (const auto& t : runs) {
    sum += t.excited_fraction;
    sum_sq += t.excited_fraction * t.excited_fraction;
    jumps += t.n_up + t.n_down;
    trajs.push_back({{"seed", t.seed},
                     {"n_up", t.n_up},
                     {"n_down", t.n_down},
                     {"duration_s", t.duration},
                     {"excited_fraction", t.excited_fraction}});
  }
  const double count = static_cast<double>(runs.size());
  const double mean = sum / count;
  const double var = runs.size() > 1 ? (sum_sq - count * mean * mean) / (count - 1.0) : 0.0;
  out["ensemble"] = {{"trajectories", runs.size()},
                     {"mean_excited_fraction", mean},
                     {"excited_fraction_standard_error", std::sqrt(std::max(var, 0.0) / count)},
                     {"jumps_per_s", static_cast<double>(jumps) / (count * duration)}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_scan(const std::string& config_path, const std::string& out_path,
             const std::string& format, unsigned threads) {
  const auto config = load_scan_config(config_path);
  const auto records = run_scan(config, threads);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot open output file '" + out_path + "'");
    out = &file;
  }
  if (format == "json") {
    write_json(config, records, *out);
  } else {
    write_csv(config, records, *out);
  }
  return out->good() ? 0 : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transition rates of rotating two-level atoms in free space and in a cavity"};
  app.require_subcommand(1);

  AtomFlags rates_atom;
  CavityFlags rates_cav;
  std::string env = "free";
  bool oracle = false;
  double oracle_decay_times = 20.0;
  auto* rates = app.add_subcommand("rates", "evaluate emission and excitation rates once");
  rates_atom.attach(*rates);
  rates_cav.attach(*rates, false);
  rates->add_option("--env", env, "environment")->check(CLI::IsMember({"free", "cavity"}));
  rates->add_flag("--oracle", oracle, "cross-check cavity responses by time-domain quadrature");
  rates->add_option("--oracle-decay-times", oracle_decay_times,
                    "quadrature truncation in cavity decay times");

  AtomFlags peaks_atom;
  CavityFlags peaks_cav;
  bool numeric = false;
  auto* peaks = app.add_subcommand("peaks", "closed-form peak report");
  peaks_atom.attach(*peaks);
  peaks_cav.attach(*peaks, true);
  peaks->add_flag("--numeric", numeric, "also locate each peak by a numeric scan over omega_c");

  double gamma_up = 0.0, gamma_down = 0.0, duration = 1.0;
  std::uint64_t seed = 1;
  std::size_t trajectories = 1;
  unsigned threads = 0;
  std::string initial = "ground";
  auto* dyn = app.add_subcommand("dynamics", "two-level population dynamics and jump statistics");
  dyn->add_option("--gamma-up", gamma_up, "excitation rate (1/s)")->required();
  dyn->add_option("--gamma-down", gamma_down, "emission rate (1/s)")->required();
  dyn->add_option("--duration", duration, "trajectory length (s)");
  dyn->add_option("--seed", seed, "seed of the first trajectory");
  dyn->add_option("--trajectories", trajectories, "number of independent trajectories")
      ->check(CLI::PositiveNumber);
  dyn->add_option("--threads", threads, "worker threads (0 = all cores)");
  dyn->add_option("--initial", initial, "initial level")
      ->check(CLI::IsMember({"ground", "excited"}));

  std::string scenario_name;
  auto* scen = app.add_subcommand("scenario", "reproduce a preset parameter scenario");
  scen->add_option("--name", scenario_name, "scenario1 | scenario2")->required();

  std::string config_path, out_path, format = "csv";
  unsigned scan_threads = 0;
  auto* scan = app.add_subcommand("scan", "parameter sweep from a JSON config file");
  scan->add_option("--config", config_path, "flat JSON config")->required();
  scan->add_option("--out", out_path, "output file (default stdout)");
  scan->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--threads", scan_threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (rates->parsed()) return cmd_rates(rates_atom, rates_cav, env, oracle, oracle_decay_times);
    if (peaks->parsed()) return cmd_peaks(peaks_atom, peaks_cav, numeric);
    if (dyn->parsed()) {
      return cmd_dynamics(gamma_up, gamma_down, duration, seed, trajectories, threads, initial);
    }
    if (scen->parsed()) {
      std::cout << run_scenario(scenario_name).to_json() << '\n';
      return 0;
    }
    if (scan->parsed()) return cmd_scan(config_path, out_path, format, scan_threads);
  } catch (const Error& e) {
    std::cerr << "rotcav: " << e.what() << '\n';
    return e.is_numerical() ? kExitNumerical : kExitInvalid;
  }
  return kExitInvalid;
}
