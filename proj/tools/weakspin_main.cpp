#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weakspin/calibration.hpp"
#include "weakspin/config.hpp"
#include "weakspin/planner.hpp"
#include "weakspin/propagation.hpp"
#include "weakspin/spin.hpp"
#include "weakspin/wavepacket.hpp"

namespace {

namespace ws = weakspin;
using ws::io::CsvTable;
using ws::io::format_value;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_no_valid_limit = 2;

ws::io::RunConfig config_or(const std::optional<std::string>& path,
                            ws::io::RunConfig fallback) {
    if (path) return ws::io::load_config(*path);
    return fallback;
}

void run_weak_curves(const std::optional<std::string>& config_path,
                     std::optional<double> theta_flag, double phi_min,
                     double phi_max, int steps, const std::string& out) {
    if (steps < 2) throw ws::ConfigError("steps must be at least 2");
    if (!(phi_max > phi_min))
        throw ws::ConfigError("phi-max must exceed phi-min");
    double theta = 2.9;
    if (config_path) {
        const ws::io::RunConfig config = ws::io::load_config(*config_path);
        if (config.theta) theta = *config.theta;
    }
    if (theta_flag) theta = *theta_flag;

    CsvTable table;
    table.metadata = {{"theta_rad", format_value(theta)},
                      {"phi_min_rad", format_value(phi_min)},
                      {"phi_max_rad", format_value(phi_max)},
                      {"steps", std::to_string(steps)}};
    table.columns = {"phi_rad", "w_re", "w_im"};
    const double step = (phi_max - phi_min) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i) {
        const double phi = phi_min + step * static_cast<double>(i);
        try {
            const ws::spin::WeakValue w = ws::spin::weak_value(theta, phi);
            table.rows.push_back({phi, w.re(), w.im()});
        } catch (const ws::OrthogonalSelection&) {
            const double nan = std::nan("");
            table.rows.push_back({phi, nan, nan});
        }
    }
    ws::io::write_csv(table, out);
    std::cout << "wrote " << table.rows.size() << " rows to " << out << "\n";
}

void run_simulate(const std::optional<std::string>& config_path,
                  const std::string& out) {
    const ws::io::RunConfig config =
        config_or(config_path, ws::io::default_run_config());
    const ws::ExperimentParams params = config.to_params();
    const std::vector<double> grid = ws::wavepacket::default_grid(
        params, config.resolved_grid_points(), config.resolved_halfwidths());
    const ws::wavepacket::DetectorProfile first =
        ws::wavepacket::first_order_detector_density(params, grid);
    const ws::wavepacket::DetectorProfile exact =
        ws::propagation::exact_detector_density(params, grid);
    const double limit =
        config.limit ? *config.limit
                     : ws::calibration::limit_gradient_only(params);
    const double predicted =
        ws::planner::displacement(params, std::abs(limit));

    CsvTable table;
    table.metadata = {
        {"theta_rad", format_value(params.theta)},
        {"phi_rad", format_value(params.phi)},
        {"limit", format_value(first.limit)},
        {"predicted_displacement_m", format_value(predicted)},
        {"mean_first_order_m", format_value(first.mean)},
        {"mean_exact_m", format_value(exact.mean)},
        {"weight_first_order", format_value(first.total_weight)},
        {"weight_exact", format_value(exact.total_weight)},
        {"evolved_width_m",
         format_value(ws::wavepacket::spread_at(
             ws::wavepacket::WavePacket{params.sigma}, params.flight_time(),
             params.mass))},
    };
    table.columns = {"z_m", "density_first_order_per_m", "density_exact_per_m"};
    table.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        table.rows.push_back({grid[i], first.density[i], exact.density[i]});
    ws::io::write_csv(table, out);
    std::cout << "limit = " << format_value(first.limit)
              << ", predicted displacement = " << format_value(predicted)
              << " m, wrote " << table.rows.size() << " rows to " << out
              << "\n";
}

void run_calibrate(const std::optional<std::string>& config_path,
                   double tolerance, const std::string& out) {
    const ws::io::RunConfig config =
        config_or(config_path, ws::io::calibration_run_config());
    const ws::ExperimentParams params = config.to_params();
    const ws::calibration::LimitScan scan = ws::calibration::scan_limits(
        params, ws::calibration::default_limit_grid());
    const double best = ws::calibration::max_limit_from_scan(scan, tolerance);

    CsvTable table;
    table.metadata = {
        {"theta_rad", format_value(params.theta)},
        {"sigma_m", format_value(params.sigma)},
        {"velocity_m_per_s", format_value(params.beam_velocity)},
        {"flight_distance_m", format_value(params.flight_distance)},
        {"deviation_tolerance", format_value(tolerance)},
        {"max_limit", format_value(best)},
    };
    table.columns = {"limit", "mean_exact_m", "mean_first_order_m",
                     "deviation"};
    for (std::size_t i = 0; i < scan.L_values.size(); ++i)
        table.rows.push_back({scan.L_values[i], scan.mean_exact[i],
                              scan.mean_first_order[i], scan.deviation[i]});
    ws::io::write_csv(table, out);
    std::cout << "L* = " << format_value(best) << " (tolerance "
              << format_value(tolerance) << "), wrote "
              << table.rows.size() << " rows to " << out << "\n";
}

void run_plan(const std::optional<std::string>& config_path,
              const std::optional<std::string>& out) {
    const ws::io::RunConfig config =
        config_or(config_path, ws::io::default_run_config());
    const ws::ExperimentParams params = config.to_params();
    const double limit =
        config.limit ? *config.limit
                     : ws::calibration::limit_gradient_only(params);
    const ws::planner::PlanResult result =
        ws::planner::plan(params, std::abs(limit), config.resolved_pitch());

    std::cout << "displacement = " << format_value(result.displacement)
              << " m\n"
              << "limit = " << format_value(result.limit) << "\n"
              << "evolved width = " << format_value(result.evolved_width)
              << " m\n"
              << "post-selection probability = "
              << format_value(result.post_selection_probability) << "\n"
              << "detector pitch = " << format_value(result.detector_pitch)
              << " m\n"
              << "margin = " << format_value(result.margin) << "\n"
              << "resolvable: " << (result.resolvable ? "yes" : "no") << "\n";

    if (out) {
        std::vector<double> velocities;
        for (double v = 600.0; v <= 2000.0 + 1e-9; v += 25.0)
            velocities.push_back(v);
        const std::vector<ws::planner::VelocityRow> sweep =
            ws::planner::velocity_sweep(params, velocities, result.limit);
        CsvTable table;
        table.metadata = {
            {"limit", format_value(result.limit)},
            {"sigma_m", format_value(params.sigma)},
            {"flight_distance_m", format_value(params.flight_distance)},
            {"detector_pitch_m", format_value(result.detector_pitch)},
        };
        table.columns = {"velocity_m_per_s", "displacement_m",
                         "evolved_width_m", "peak_density_per_m"};
        for (const ws::planner::VelocityRow& row : sweep)
            table.rows.push_back({row.velocity, row.displacement,
                                  row.evolved_width, row.peak_density});
        ws::io::write_csv(table, *out);
        std::cout << "wrote " << table.rows.size() << " rows to " << *out
                  << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak-measurement Stern-Gerlach beam simulator"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::optional<double> theta_flag;
    double phi_min = 0.0;
    double phi_max = 2.0 * std::numbers::pi;
    int steps = 629;
    double tolerance = ws::calibration::default_deviation_tolerance;
    std::string out_curves = "weak_curves.csv";
    std::string out_simulate = "simulate.csv";
    std::string out_calibrate = "calibration.csv";
    std::optional<std::string> out_plan;

    CLI::App* curves = app.add_subcommand(
        "weak-curves", "Tabulate weak-value components over phi");
    curves->add_option("--config", config_path, "config file (theta source)");
    curves->add_option("--theta", theta_flag, "polar angle, rad");
    curves->add_option("--phi-min", phi_min, "start of the phi range, rad");
    curves->add_option("--phi-max", phi_max, "end of the phi range, rad");
    curves->add_option("--steps", steps, "number of rows");
    curves->add_option("--out", out_curves, "output CSV path");

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Detector densities, first-order and exact");
    simulate->add_option("--config", config_path, "config file");
    simulate->add_option("--out", out_simulate, "output CSV path");

    CLI::App* calibrate = app.add_subcommand(
        "calibrate", "Scan limits and report the first-order cut-off");
    calibrate->add_option("--config", config_path, "config file");
    calibrate->add_option("--tolerance", tolerance,
                          "relative mean deviation tolerance");
    calibrate->add_option("--out", out_calibrate, "output CSV path");

    CLI::App* plan = app.add_subcommand(
        "plan", "Displacement prediction and velocity sweep");
    plan->add_option("--config", config_path, "config file");
    plan->add_option("--out", out_plan, "velocity sweep CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (curves->parsed())
            run_weak_curves(config_path, theta_flag, phi_min, phi_max, steps,
                            out_curves);
        else if (simulate->parsed())
            run_simulate(config_path, out_simulate);
        else if (calibrate->parsed())
            run_calibrate(config_path, tolerance, out_calibrate);
        else if (plan->parsed())
            run_plan(config_path, out_plan);
    } catch (const ws::NoValidLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_no_valid_limit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_ok;
}
