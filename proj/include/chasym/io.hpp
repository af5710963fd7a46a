#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chasym/analysis.hpp"
#include "chasym/ch_solver.hpp"

namespace chasym {

// Bad configuration text or file; maps to the usage exit code.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfigFile {
    SimulationConfig sim;
    std::string output_dir = ".";
};

RunConfigFile parse_config_text(const std::string& text);
RunConfigFile load_config(const std::string& path);

std::string snapshot_filename(double t);
void write_snapshot_csv(const Snapshot& s, const std::string& path);
GridField read_snapshot_csv(const std::string& path);

// Decimal text with 15 significant digits, as written to JSON.
double round15(double v);

std::string report_to_json(const ComparisonReport& r);
ComparisonReport report_from_json(const std::string& text);

void write_rows_csv(const std::vector<ComparisonRow>& rows, const std::string& path);

struct ManifestEntry {
    double t;
    std::string file;
    double H1, Hm1, mass;
};

std::string manifest_to_json(const SimulationConfig& cfg, const std::vector<ManifestEntry>& entries, bool completed,
                             const std::string& failure);

}  // namespace chasym
