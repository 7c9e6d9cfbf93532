#include "weakspin/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "weakspin/calibration.hpp"

namespace weakspin::io {

namespace {

using Field = std::optional<double> RunConfig::*;

// Declaration order here fixes the order keys are written back in.
const std::vector<std::pair<std::string, Field>>& key_table() {
    static const std::vector<std::pair<std::string, Field>> table = {
        {"theta", &RunConfig::theta},
        {"phi", &RunConfig::phi},
        {"B0", &RunConfig::B0},
        {"dBdz", &RunConfig::dBdz},
        {"limit", &RunConfig::limit},
        {"delta_t", &RunConfig::delta_t},
        {"magnet_length", &RunConfig::magnet_length},
        {"sigma", &RunConfig::sigma},
        {"flight_distance", &RunConfig::flight_distance},
        {"velocity", &RunConfig::velocity},
        {"mass", &RunConfig::mass},
        {"moment", &RunConfig::moment},
        {"grid_points", &RunConfig::grid_points},
        {"grid_halfwidths", &RunConfig::grid_halfwidths},
        {"detector_pitch", &RunConfig::detector_pitch},
        {"inequality_threshold", &RunConfig::inequality_threshold},
    };
    return table;
}

Field field_for(const std::string& key) {
    for (const auto& [name, field] : key_table())
        if (name == key) return field;
    throw ConfigError("unknown config key '" + key + "'");
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(text, &consumed);
        if (consumed != text.size())
            throw ConfigError("invalid number '" + text + "' for key '" + key +
                              "'");
        return value;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("invalid number '" + text + "' for key '" + key +
                          "'");
    }
}

void assign(RunConfig& config, const std::string& key, double value) {
    const Field field = field_for(key);
    if (config.*field)
        throw ConfigError("duplicate config key '" + key + "'");
    config.*field = value;
}

double require(const std::optional<double>& value, const char* key) {
    if (!value)
        throw ConfigError(std::string("missing required config key '") + key +
                          "'");
    return *value;
}

std::string format_with(const char* fmt, double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, fmt, v);
    return buffer;
}

}  // namespace

std::string format_value(double v) { return format_with("%.12g", v); }
std::string format_exact(double v) { return format_with("%.17g", v); }

ExperimentParams RunConfig::to_params() const {
    if (delta_t && magnet_length)
        throw ConfigError("delta_t and magnet_length are mutually exclusive");
    if (dBdz && limit)
        throw ConfigError("dBdz and limit are mutually exclusive");

    ExperimentParams p;
    p.beam_velocity = require(velocity, "velocity");
    p.flight_distance = require(flight_distance, "flight_distance");
    p.sigma = require(sigma, "sigma");
    p.theta = theta.value_or(p.theta);
    p.phi = phi.value_or(0.0);
    p.B0 = B0.value_or(0.0);
    if (mass) p.mass = *mass;
    if (moment) p.moment = *moment;
    p.delta_t = delta_t ? *delta_t
                        : magnet_length.value_or(0.01) / p.beam_velocity;
    p.dBdz = dBdz.value_or(0.0);
    p.validate();
    if (limit)
        p.dBdz = calibration::gradient_for_limit(*limit, p.theta, p.sigma,
                                                 p.delta_t, p.moment);
    return p;
}

std::size_t RunConfig::resolved_grid_points() const {
    if (!grid_points) return 4096;
    const double n = *grid_points;
    if (!(n >= 16.0) || n != std::floor(n))
        throw ConfigError("grid_points must be an integer >= 16");
    return static_cast<std::size_t>(n);
}

double RunConfig::resolved_halfwidths() const {
    if (!grid_halfwidths) return 8.0;
    if (!(*grid_halfwidths >= 6.0))
        throw ConfigError("grid_halfwidths must be at least 6");
    return *grid_halfwidths;
}

double RunConfig::resolved_pitch() const {
    if (!detector_pitch) return 25e-6;
    if (!(*detector_pitch > 0.0))
        throw ConfigError("detector_pitch must be positive");
    return *detector_pitch;
}

RunConfig default_run_config() {
    RunConfig c;
    c.theta = 2.9;
    c.phi = 0.0;
    c.limit = 0.37;
    c.sigma = 0.5e-6;
    c.flight_distance = 2.5;
    c.velocity = 1717.0;
    return c;
}

RunConfig calibration_run_config() {
    RunConfig c;
    c.theta = 2.9;
    c.phi = 0.0;
    c.magnet_length = 0.01;
    c.sigma = 1e-6;
    c.flight_distance = 2.5;
    c.velocity = 1750.0;
    return c;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig config;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        assign(config, key, parse_number(key, value));
    }
    return config;
}

RunConfig parse_config_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON config: ") + e.what());
    }
    if (!parsed.is_object())
        throw ConfigError("JSON config must be a flat object of numbers");
    RunConfig config;
    for (const auto& [key, value] : parsed.items()) {
        if (!value.is_number())
            throw ConfigError("config key '" + key + "' must be a number");
        assign(config, key, value.get<double>());
    }
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (path.extension() == ".json") return parse_config_json(buffer.str());
    return parse_config_text(buffer.str());
}

std::string render_config(const RunConfig& config) {
    std::string out;
    for (const auto& [name, field] : key_table())
        if (config.*field)
            out += name + " = " + format_exact(*(config.*field)) + "\n";
    return out;
}

void write_config(const RunConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write config file '" + path.string() + "'");
    out << render_config(config);
}

std::string render_csv(const CsvTable& table) {
    std::string out;
    for (const auto& [key, value] : table.metadata)
        out += "# " + key + ": " + value + "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out += ",";
        out += table.columns[i];
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ",";
            out += format_value(row[i]);
        }
        out += "\n";
    }
    return out;
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write output file '" + path.string() + "'");
    out << render_csv(table);
}

}  // namespace weakspin::io
