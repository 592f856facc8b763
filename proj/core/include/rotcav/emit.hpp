#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rotcav/scan.hpp"

namespace rotcav {

/// Column names for a scan, in output order: the swept parameter, then the
/// requested outputs. e.g. omega_c_rad_s, gamma_down_per_s, gamma_up_per_s,
/// channel_<label>_per_s..., p_excited_steady, flags.
std::vector<std::string> scan_columns(const ScanConfig& config);

/// Cell values matching `scan_columns`. Numbers carry 17 significant digits;
/// a missing value is the empty string.
std::vector<std::string> scan_row(const ScanConfig& config, const OutputRecord& record);

/// Formats a double with 17 significant digits.
std::string format_number(double value);

/// Quotes a CSV field if it contains a comma, quote, CR or LF.
std::string csv_escape(const std::string& field);

void write_csv(const ScanConfig& config, const std::vector<OutputRecord>& records,
               std::ostream& out);

/// JSON document {"sweep": ..., "fixed": {...}, "columns": [...], "records": [{...}]}
/// whose record objects hold the same fields as the CSV rows.
void write_json(const ScanConfig& config, const std::vector<OutputRecord>& records,
                std::ostream& out);

/// Single evaluation rendered as JSON (used by `rotcav rates`).
std::string rates_to_json(const ParameterSet& params, const RateResult& result, int indent = 2);

/// Joined diagnostic names, ';'-separated.
std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics);

}  // namespace rotcav
