#include "rotcav/scan.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "rotcav/dynamics.hpp"

namespace rotcav {

Environment ParameterSet::environment() const {
  if (env == EnvKind::Cavity) return CavitySpec(omega_c, q, volume);
  return FreeSpace{};
}

namespace {

double* field(ParameterSet& p, std::string_view name) {
  if (name == "omega0") return &p.omega0;
  if (name == "omega-rot") return &p.omega_rot;
  if (name == "radius") return &p.radius;
  if (name == "d-rho") return &p.d_rho;
  if (name == "d-phi") return &p.d_phi;
  if (name == "d-z") return &p.d_z;
  if (name == "omega-c") return &p.omega_c;
  if (name == "q") return &p.q;
  if (name == "volume") return &p.volume;
  return nullptr;
}

}  // namespace

void ParameterSet::set(std::string_view name, double value) {
  double* f = field(*this, name);
  if (!f) throw Error(ErrorCode::InvalidConfig, fmt::format("unknown parameter '{}'", name));
  *f = value;
}

double ParameterSet::get(std::string_view name) const {
  auto copy = *this;
  const double* f = field(copy, name);
  if (!f) throw Error(ErrorCode::InvalidConfig, fmt::format("unknown parameter '{}'", name));
  return *f;
}

bool is_parameter_name(std::string_view name) {
  return std::find(std::begin(kParameterNames), std::end(kParameterNames), name) !=
         std::end(kParameterNames);
}

bool is_frequency_parameter(std::string_view name) {
  return name == "omega0" || name == "omega-rot" || name == "omega-c";
}

std::string_view to_string(OutputField f) {
  switch (f) {
    case OutputField::GammaDown: return "gamma_down";
    case OutputField::GammaUp: return "gamma_up";
    case OutputField::Channels: return "channels";
    case OutputField::Diagnostics: return "diagnostics";
    case OutputField::PExcitedSteady: return "p_excited_steady";
  }
  return "unknown";
}

bool ScanConfig::wants(OutputField f) const {
  return std::find(outputs.begin(), outputs.end(), f) != outputs.end();
}

std::vector<double> ScanConfig::grid_values() const {
  std::vector<double> values(points);
  if (points == 0) return values;
  if (points == 1) {
    values[0] = lo;
    return values;
  }
  const double n = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / n;
    values[i] = grid == GridKind::Linear ? lo + (hi - lo) * t
                                         : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * t);
  }
  // Pin the endpoints exactly.
  values.front() = lo;
  values.back() = hi;
  return values;
}

void ScanConfig::validate() const {
  std::vector<std::string> problems;
  if (!is_parameter_name(sweep)) {
    problems.push_back(fmt::format("sweep: '{}' is not a parameter name", sweep));
  }
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    problems.push_back(fmt::format("lo/hi: need finite lo < hi (got {}, {})", lo, hi));
  }
  if (grid == GridKind::Logarithmic && !(lo > 0.0)) {
    problems.push_back(fmt::format("grid: logarithmic grid needs lo > 0 (got {})", lo));
  }
  if (points < 2) problems.push_back(fmt::format("points: need >= 2 (got {})", points));
  if (outputs.empty()) problems.push_back("outputs: at least one output is required");

  if (problems.empty()) {
    constexpr std::size_t kMaxReported = 5;
    std::size_t bad = 0;
    const auto values = grid_values();
    for (std::size_t i = 0; i < values.size(); ++i) {
      ParameterSet p = fixed;
      p.set(sweep, values[i]);
      try {
        const auto atom = p.atom();
        const auto motion = p.motion();
        (void)p.environment();
        (void)atom;
        require_subluminal(motion);
      } catch (const Error& e) {
        if (bad++ < kMaxReported) {
          problems.push_back(fmt::format("grid point {} ({} = {:.17g}): {}", i, sweep, values[i],
                                         e.what()));
        }
      }
    }
    if (bad > kMaxReported) {
      problems.push_back(fmt::format("... {} more invalid grid points", bad - kMaxReported));
    }
  }

  if (!problems.empty()) {
    std::string msg = "invalid scan configuration";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(ErrorCode::InvalidConfig, msg);
  }
}

OutputRecord evaluate_point(const ParameterSet& params, double sweep_value) {
  OutputRecord rec;
  rec.inputs = params;
  rec.sweep_value = sweep_value;
  rec.rates = transition_rates(params.atom(), params.motion(), params.environment());
  if (rec.rates.gamma_up + rec.rates.gamma_down > 0.0) {
    rec.p_excited_steady = steady_state(rec.rates.gamma_up, rec.rates.gamma_down).p_excited;
  }
  return rec;
}

std::vector<OutputRecord> run_scan(const ScanConfig& config, unsigned threads) {
  config.validate();
  const auto values = config.grid_values();
  std::vector<OutputRecord> out(values.size());

  auto eval = [&](std::size_t i) {
    ParameterSet p = config.fixed;
    p.set(config.sweep, values[i]);
    out[i] = evaluate_point(p, values[i]);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, values.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < values.size(); ++i) eval(i);
    return out;
  }
  // Every point was validated above, so workers do not throw.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < values.size(); i += workers) eval(i);
    });
  }
  pool.clear();
  return out;
}

}  // namespace rotcav
