#include "rotcav/scan_config.hpp"

#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace rotcav {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::InvalidConfig, msg); }

double number(const json& j, const std::string& key) {
  if (!j.is_number()) fail(fmt::format("{}: expected a number, got {}", key, j.dump()));
  return j.get<double>();
}

OutputField parse_output(const std::string& name) {
  for (auto f : {OutputField::GammaDown, OutputField::GammaUp, OutputField::Channels,
                 OutputField::Diagnostics, OutputField::PExcitedSteady}) {
    if (name == to_string(f)) return f;
  }
  fail(fmt::format("outputs: unknown output '{}'", name));
}

}  // namespace

ScanConfig parse_scan_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(fmt::format("not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) fail("top level must be a JSON object");

  ScanConfig cfg;
  bool cyclic = false;
  bool have_sweep = false, have_lo = false, have_hi = false, have_points = false;
  bool have_env = false;

  for (const auto& [key, value] : doc.items()) {
    if (is_parameter_name(key)) {
      cfg.fixed.set(key, number(value, key));
    } else if (key == "env") {
      if (value == "free") {
        cfg.fixed.env = EnvKind::Free;
      } else if (value == "cavity") {
        cfg.fixed.env = EnvKind::Cavity;
      } else {
        fail(fmt::format("env: expected \"free\" or \"cavity\", got {}", value.dump()));
      }
      have_env = true;
    } else if (key == "sweep") {
      if (!value.is_string()) fail("sweep: expected a parameter name");
      cfg.sweep = value.get<std::string>();
      have_sweep = true;
    } else if (key == "lo") {
      cfg.lo = number(value, key);
      have_lo = true;
    } else if (key == "hi") {
      cfg.hi = number(value, key);
      have_hi = true;
    } else if (key == "grid") {
      if (value == "linear") {
        cfg.grid = GridKind::Linear;
      } else if (value == "logarithmic") {
        cfg.grid = GridKind::Logarithmic;
      } else {
        fail(fmt::format("grid: expected \"linear\" or \"logarithmic\", got {}", value.dump()));
      }
    } else if (key == "points") {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        fail(fmt::format("points: expected a non-negative integer, got {}", value.dump()));
      }
      cfg.points = value.get<std::size_t>();
      have_points = true;
    } else if (key == "outputs") {
      if (!value.is_array()) fail("outputs: expected an array of output names");
      cfg.outputs.clear();
      for (const auto& o : value) {
        if (!o.is_string()) fail("outputs: expected an array of output names");
        cfg.outputs.push_back(parse_output(o.get<std::string>()));
      }
    } else if (key == "cyclic") {
      if (!value.is_boolean()) fail("cyclic: expected true or false");
      cyclic = value.get<bool>();
    } else {
      fail(fmt::format("unknown key '{}'", key));
    }
  }

  std::vector<std::string> missing;
  if (!have_env) missing.emplace_back("env");
  if (!have_sweep) missing.emplace_back("sweep");
  if (!have_lo) missing.emplace_back("lo");
  if (!have_hi) missing.emplace_back("hi");
  if (!have_points) missing.emplace_back("points");
  std::vector<std::string> required{"omega0"};
  if (cfg.fixed.env == EnvKind::Cavity) {
    required.insert(required.end(), {"omega-c", "q", "volume"});
  }
  for (const auto& r : required) {
    if (!doc.contains(r) && cfg.sweep != r) missing.push_back(r);
  }
  if (!missing.empty()) {
    std::string msg = "missing required key(s):";
    for (const auto& m : missing) msg += " " + m;
    fail(msg);
  }

  if (cyclic) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    for (auto name : kParameterNames) {
      if (is_frequency_parameter(name)) cfg.fixed.set(name, cfg.fixed.get(name) * kTwoPi);
    }
    if (is_frequency_parameter(cfg.sweep)) {
      cfg.lo *= kTwoPi;
      cfg.hi *= kTwoPi;
    }
  }

  cfg.validate();
  return cfg;
}

ScanConfig load_scan_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(fmt::format("cannot read config file '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scan_config(ss.str());
}

}  // namespace rotcav
