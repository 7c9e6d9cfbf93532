#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakspin/params.hpp"

namespace weakspin::io {

// Flat run description, SI units. Unknown keys are rejected on parse.
// velocity, flight_distance and sigma must be present in every config;
// everything else falls back to documented defaults.
struct RunConfig {
    std::optional<double> theta;            // rad, default 2.9
    std::optional<double> phi;              // rad, default 0
    std::optional<double> B0;               // T, default 0
    std::optional<double> dBdz;             // T/m, exclusive with limit
    std::optional<double> limit;            // dimensionless
    std::optional<double> delta_t;          // s, exclusive with magnet_length
    std::optional<double> magnet_length;    // m, default 0.01
    std::optional<double> sigma;            // m, required
    std::optional<double> flight_distance;  // m, required
    std::optional<double> velocity;         // m/s, required
    std::optional<double> mass;             // kg, default helium-4
    std::optional<double> moment;           // J/T, default 2 Bohr magnetons
    std::optional<double> grid_points;      // default 4096
    std::optional<double> grid_halfwidths;  // default 8
    std::optional<double> detector_pitch;   // m, default 25e-6
    std::optional<double> inequality_threshold;  // default 0.1

    bool operator==(const RunConfig&) const = default;

    // Resolves defaults and derived quantities into physical parameters:
    // delta_t = magnet_length / velocity unless given directly, and the
    // gradient is solved from `limit` when that form is used.
    // Throws ConfigError on missing or conflicting keys.
    ExperimentParams to_params() const;

    std::size_t resolved_grid_points() const;
    double resolved_halfwidths() const;
    double resolved_pitch() const;
};

// Headline geometry: 1717 m/s, 2.5 m flight, 0.5 um beam, phi 0, limit 0.37.
RunConfig default_run_config();

// Reference calibration geometry: 1750 m/s, 2.5 m, 1 um beam, 10 mm stage.
RunConfig calibration_run_config();

// One `key = value` pair per line; blank lines and '#' comments ignored.
RunConfig parse_config_text(const std::string& text);

// JSON alternative: a flat object of numbers with the same keys.
RunConfig parse_config_json(const std::string& text);

// Dispatches on the .json extension.
RunConfig load_config(const std::filesystem::path& path);

std::string render_config(const RunConfig& config);
void write_config(const RunConfig& config, const std::filesystem::path& path);

// CSV with a '#'-prefixed metadata header, for plotting stacks.
struct CsvTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string render_csv(const CsvTable& table);
void write_csv(const CsvTable& table, const std::filesystem::path& path);

// Fixed-format helpers so emitted tables are deterministic.
std::string format_value(double v);   // 12 significant digits, for CSV cells
std::string format_exact(double v);   // 17 significant digits, round-trips

}  // namespace weakspin::io
