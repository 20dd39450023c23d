#include "hetnet/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include <yaml-cpp/yaml.h>

#include "hetnet/errors.hpp"

namespace hetnet {

namespace {

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) throw ConfigError(key, "expected a scalar value");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(key, "cannot parse '" + node.Scalar() + "'");
  }
}

template <typename T>
std::vector<T> sequence(const YAML::Node& node, const std::string& key) {
  if (node.IsScalar()) return {scalar<T>(node, key)};
  if (!node.IsSequence()) throw ConfigError(key, "expected a list");
  std::vector<T> out;
  for (const auto& item : node) out.push_back(scalar<T>(item, key));
  return out;
}

using Setter = std::function<void(NetworkConfig&, const YAML::Node&, const std::string&)>;

template <typename T>
Setter set(T NetworkConfig::*field) {
  return [field](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
    c.*field = scalar<T>(n, k);
  };
}

template <typename T>
Setter set_tier(TierParams NetworkConfig::*tier, T TierParams::*field) {
  return [tier, field](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
    (c.*tier).*field = scalar<T>(n, k);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"macro_antennas", set_tier(&NetworkConfig::macro, &TierParams::antennas)},
      {"micro_antennas", set_tier(&NetworkConfig::micro, &TierParams::antennas)},
      {"macro_erp_dbm", set_tier(&NetworkConfig::macro, &TierParams::erp_dbm)},
      {"micro_erp_dbm", set_tier(&NetworkConfig::micro, &TierParams::erp_dbm)},
      {"macro_users", set_tier(&NetworkConfig::macro, &TierParams::users)},
      {"micro_users", set_tier(&NetworkConfig::micro, &TierParams::users)},
      {"macro_radius_m", set_tier(&NetworkConfig::macro, &TierParams::radius_m)},
      {"micro_radius_m", set_tier(&NetworkConfig::micro, &TierParams::radius_m)},
      {"pathloss_exponent_uma", set_tier(&NetworkConfig::macro, &TierParams::pathloss_exponent)},
      {"pathloss_exponent_umi", set_tier(&NetworkConfig::micro, &TierParams::pathloss_exponent)},
      {"shadow_sigma_db", set(&NetworkConfig::shadow_sigma_db)},
      {"decorrelation_distance_m", set(&NetworkConfig::decorrelation_distance_m)},
      {"reference_distance_m", set(&NetworkConfig::reference_distance_m)},
      {"num_macrocells", set(&NetworkConfig::num_macrocells)},
      {"macro_isd_m", set(&NetworkConfig::macro_isd_m)},
      {"num_microcells", set(&NetworkConfig::num_microcells)},
      {"edge_deployment", set(&NetworkConfig::edge_deployment)},
      {"edge_inner_radius_m", set(&NetworkConfig::edge_inner_radius_m)},
      {"placement_attempts", set(&NetworkConfig::placement_attempts)},
      {"snr_reference_distance_m", set(&NetworkConfig::snr_reference_distance_m)},
      {"snr_db", set(&NetworkConfig::snr_db)},
      {"scenario",
       [](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
         const auto name = scalar<std::string>(n, k);
         const auto s = parse_scenario(name);
         if (!s) throw ConfigError(k, "unknown scenario '" + name + "'");
         c.experiment.scenario = *s;
       }},
      {"strategies",
       [](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
         c.experiment.strategies.clear();
         for (const auto& name : sequence<std::string>(n, k)) {
           const auto s = parse_strategy(name);
           if (!s) throw ConfigError(k, "unknown strategy '" + name + "'");
           c.experiment.strategies.push_back(*s);
         }
       }},
      {"snr_grid_db",
       [](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
         c.experiment.snr_grid_db = sequence<double>(n, k);
       }},
      {"microcell_counts",
       [](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
         c.experiment.microcell_counts = sequence<int>(n, k);
       }},
      {"rho",
       [](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
         c.experiment.rho = scalar<double>(n, k);
       }},
      {"trials",
       [](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
         c.experiment.trials = scalar<int>(n, k);
       }},
      {"seed",
       [](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
         c.experiment.base_seed = scalar<std::uint64_t>(n, k);
       }},
      {"fixed_topology",
       [](NetworkConfig& c, const YAML::Node& n, const std::string& k) {
         c.experiment.fixed_topology = scalar<bool>(n, k);
       }},
  };
  return table;
}

}  // namespace

NetworkConfig load_config_text(std::string_view text) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ConfigError("<document>", std::string("malformed document: ") + e.what());
  }
  NetworkConfig config;
  if (doc.IsNull()) {
    validate(config);
    return config;
  }
  if (!doc.IsMap()) throw ConfigError("<document>", "expected key: value pairs");

  const auto& table = setters();
  for (const auto& entry : doc) {
    const auto key = entry.first.as<std::string>();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError(key, "unknown key");
    it->second(config, entry.second, key);
  }
  validate(config);
  return config;
}

NetworkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<document>", "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_config_text(buffer.str());
}

void apply_scenario_defaults(NetworkConfig& config) {
  auto& e = config.experiment;
  if (e.snr_grid_db.empty()) e.snr_grid_db = default_snr_grid(e.scenario);
  if (e.microcell_counts.empty()) e.microcell_counts = default_microcell_counts(e.scenario);
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_results(const CurveTable& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << kCsvHeader << '\n';
    for (const auto& r : table.rows)
      out << r.scenario << ',' << r.strategy << ',' << r.x_name << ',' << format_double(r.x_value)
          << ',' << r.metric << ',' << format_double(r.value) << ',' << format_double(r.stderr_)
          << ',' << r.trials << ',' << r.seed << '\n';
    return;
  }
  out << "[\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    out << "  {\"scenario\": " << json_string(r.scenario)
        << ", \"strategy\": " << json_string(r.strategy)
        << ", \"x_name\": " << json_string(r.x_name)
        << ", \"x_value\": " << format_double(r.x_value)
        << ", \"metric\": " << json_string(r.metric)
        << ", \"value\": " << format_double(r.value)
        << ", \"stderr\": " << format_double(r.stderr_) << ", \"trials\": " << r.trials
        << ", \"seed\": " << r.seed << "}" << (i + 1 < table.rows.size() ? "," : "") << '\n';
  }
  out << "]\n";
}

void emit_results(const CurveTable& table, OutputFormat format,
                  const std::filesystem::path& destination) {
  if (table.rows.empty()) throw IoError("emit_results: empty table");
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + destination.string() + " for writing");
  write_results(table, format, out);
  out.flush();
  if (!out) throw IoError("write to " + destination.string() + " failed");
}

CurveTable parse_csv(std::istream& in) {
  CurveTable table;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw IoError("parse_csv: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw IoError("parse_csv: expected 9 fields in '" + line + "'");
    try {
      table.rows.push_back(CurveRow{f[0], f[1], f[2], std::stod(f[3]), f[4], std::stod(f[5]),
                                    std::stod(f[6]), std::stoi(f[7]), std::stoull(f[8])});
    } catch (const std::exception&) {
      throw IoError("parse_csv: malformed number in '" + line + "'");
    }
  }
  return table;
}

}  // namespace hetnet
