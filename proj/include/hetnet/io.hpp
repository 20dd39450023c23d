#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "hetnet/config.hpp"
#include "hetnet/harness.hpp"

namespace hetnet {

/// Parses a flat `key: value` document (YAML subset; lists as [a, b]).
/// Unknown keys are rejected, missing keys keep their defaults, and the
/// result is validated. Throws ConfigError.
NetworkConfig load_config_text(std::string_view text);
NetworkConfig load_config(const std::filesystem::path& path);

/// Fills unset sweep grids with the scenario defaults.
void apply_scenario_defaults(NetworkConfig& config);

enum class OutputFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "scenario,strategy,x_name,x_value,metric,value,stderr,trials,seed";

/// Doubles with 17 significant digits.
std::string format_double(double value);

void write_results(const CurveTable& table, OutputFormat format, std::ostream& out);
/// Throws IoError when the table is empty or the file cannot be written.
void emit_results(const CurveTable& table, OutputFormat format,
                  const std::filesystem::path& destination);

/// Reads a CSV produced by write_results back into a table.
CurveTable parse_csv(std::istream& in);

}  // namespace hetnet
