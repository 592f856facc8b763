#include "rotcav/emit.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace rotcav {

namespace {

std::string column_unit(std::string_view name) {
  if (is_frequency_parameter(name)) return "_rad_s";
  if (name == "radius") return "_m";
  if (name == "volume") return "_m3";
  if (name.starts_with("d-")) return "_c_m";
  return "";
}

std::string sweep_column(std::string_view sweep) {
  std::string col(sweep);
  std::replace(col.begin(), col.end(), '-', '_');
  return col + column_unit(sweep);
}

nlohmann::json params_json(const ParameterSet& p) {
  nlohmann::json j;
  for (auto name : kParameterNames) {
    if (p.env == EnvKind::Free && (name == "omega-c" || name == "q" || name == "volume")) continue;
    j[std::string(name)] = p.get(name);
  }
  j["env"] = p.env == EnvKind::Cavity ? "cavity" : "free";
  return j;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto d : diagnostics) {
    if (!out.empty()) out += ';';
    out += to_string(d);
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> scan_columns(const ScanConfig& config) {
  std::vector<std::string> cols{sweep_column(config.sweep)};
  if (config.wants(OutputField::GammaDown)) cols.emplace_back("gamma_down_per_s");
  if (config.wants(OutputField::GammaUp)) cols.emplace_back("gamma_up_per_s");
  if (config.wants(OutputField::Channels)) {
    for (auto label : kAllChannelLabels) cols.push_back(fmt::format("channel_{}_per_s", to_string(label)));
  }
  if (config.wants(OutputField::PExcitedSteady)) cols.emplace_back("p_excited_steady");
  if (config.wants(OutputField::Diagnostics)) cols.emplace_back("flags");
  return cols;
}

std::vector<std::string> scan_row(const ScanConfig& config, const OutputRecord& rec) {
  std::vector<std::string> row{format_number(rec.sweep_value)};
  if (config.wants(OutputField::GammaDown)) row.push_back(format_number(rec.rates.gamma_down));
  if (config.wants(OutputField::GammaUp)) row.push_back(format_number(rec.rates.gamma_up));
  if (config.wants(OutputField::Channels)) {
    for (auto label : kAllChannelLabels) row.push_back(format_number(rec.rates.contribution(label)));
  }
  if (config.wants(OutputField::PExcitedSteady)) {
    row.push_back(rec.p_excited_steady ? format_number(*rec.p_excited_steady) : std::string());
  }
  if (config.wants(OutputField::Diagnostics)) row.push_back(join_diagnostics(rec.rates.diagnostics));
  return row;
}

void write_csv(const ScanConfig& config, const std::vector<OutputRecord>& records,
               std::ostream& out) {
  auto write_line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(cells[i]);
    }
    out << '\n';
  };
  write_line(scan_columns(config));
  for (const auto& rec : records) write_line(scan_row(config, rec));
}

void write_json(const ScanConfig& config, const std::vector<OutputRecord>& records,
                std::ostream& out) {
  const auto cols = scan_columns(config);
  nlohmann::json doc;
  doc["sweep"] = config.sweep;
  doc["grid"] = config.grid == GridKind::Linear ? "linear" : "logarithmic";
  doc["fixed"] = params_json(config.fixed);
  doc["columns"] = cols;
  auto& arr = doc["records"] = nlohmann::json::array();
  for (const auto& rec : records) {
    const auto row = scan_row(config, rec);
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i] == "flags") {
        obj[cols[i]] = row[i];
      } else if (row[i].empty()) {
        obj[cols[i]] = nullptr;
      } else {
        // Same 17-digit text as the CSV cell, so both parse to the same double.
        obj[cols[i]] = std::strtod(row[i].c_str(), nullptr);
      }
    }
    arr.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

std::string rates_to_json(const ParameterSet& params, const RateResult& result, int indent) {
  nlohmann::json j;
  j["inputs"] = params_json(params);
  j["gamma_down_per_s"] = result.gamma_down;
  j["gamma_up_per_s"] = result.gamma_up;
  j["lorentz_gamma"] = result.lorentz_gamma;
  j["lab_frequency_rad_s"] = result.lab_frequency;
  auto& chans = j["channels"] = nlohmann::json::array();
  for (const auto& cr : result.channels) {
    chans.push_back({
        {"label", std::string(to_string(cr.channel.label))},
        {"direction", std::string(to_string(cr.channel.direction))},
        {"frequency_rad_s", cr.channel.frequency},
        {"amplitude_m3_per_s2", cr.channel.amplitude},
        {"velocity_order", cr.channel.velocity_order},
        {"rate_per_s", cr.rate},
    });
  }
  auto& diags = j["diagnostics"] = nlohmann::json::array();
  for (auto d : result.diagnostics) diags.push_back(std::string(to_string(d)));
  return j.dump(indent);
}

}  // namespace rotcav
