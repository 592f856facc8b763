#pragma once

#include <filesystem>
#include <string_view>

#include "rotcav/scan.hpp"

namespace rotcav {

/// Parses a flat JSON object into a ScanConfig. Keys are the CLI flag names
/// ("omega0", "omega-rot", "radius", "d-rho", "d-phi", "d-z", "env",
/// "omega-c", "q", "volume") plus the sweep keys "sweep", "lo", "hi", "grid"
/// ("linear" | "logarithmic"), "points", "outputs" and "cyclic". Values are
/// SI; with "cyclic": true the frequency parameters (and a frequency sweep
/// range) are read as Hz and multiplied by 2 pi. Unknown keys, wrong types
/// and missing required keys are InvalidConfig errors. The result is
/// validated.
ScanConfig parse_scan_config(std::string_view text);

ScanConfig load_scan_config(const std::filesystem::path& path);

}  // namespace rotcav
