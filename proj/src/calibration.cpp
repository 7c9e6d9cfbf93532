#include "weakspin/calibration.hpp"

#include <cmath>
#include <numbers>

#include "weakspin/propagation.hpp"
#include "weakspin/wavepacket.hpp"

namespace weakspin::calibration {

namespace {

// tan(theta/2) pole detection; doubles cannot represent pi exactly, so the
// guard is a band around it rather than an equality.
double checked_half_tangent(double theta) {
    if (std::abs(std::cos(theta / 2.0)) < 1e-12)
        throw TanPole("tan(theta/2) pole at theta = pi");
    return std::tan(theta / 2.0);
}

}  // namespace

double limit_of(const ExperimentParams& params) {
    params.validate();
    return params.phase_angle_at(params.sigma) *
           checked_half_tangent(params.theta);
}

double limit_gradient_only(const ExperimentParams& params) {
    params.validate();
    return params.moment * params.delta_t * params.dBdz * params.sigma /
           constants().hbar * checked_half_tangent(params.theta);
}

double gradient_for_limit(double L, double theta, double sigma, double delta_t,
                          double moment) {
    const double tan_half = checked_half_tangent(theta);
    if (!(theta > 0.0) || !(theta < std::numbers::pi))
        throw NonPositiveInputs("theta must lie in (0, pi)");
    if (!(L > 0.0)) throw NonPositiveInputs("limit must be positive");
    if (!(sigma > 0.0)) throw NonPositiveInputs("sigma must be positive");
    if (!(delta_t > 0.0)) throw NonPositiveInputs("delta_t must be positive");
    if (!(moment > 0.0)) throw NonPositiveInputs("moment must be positive");
    return L * constants().hbar / (moment * delta_t * sigma * tan_half);
}

ExperimentParams default_geometry(double theta) {
    ExperimentParams p;
    p.theta = theta;
    p.phi = 0.0;
    p.B0 = 0.0;
    p.dBdz = 0.0;
    p.sigma = 1e-6;
    p.flight_distance = 2.5;
    p.beam_velocity = 1750.0;
    p.delta_t = 0.01 / p.beam_velocity;  // 10 mm weak stage
    return p;
}

std::vector<double> default_limit_grid() {
    std::vector<double> grid;
    grid.reserve(150);
    for (int i = 1; i <= 150; ++i)
        grid.push_back(static_cast<double>(i) * 0.01);
    return grid;
}

double mean_deviation_at(const ExperimentParams& base, double L) {
    ExperimentParams p = base;
    p.dBdz =
        gradient_for_limit(L, p.theta, p.sigma, p.delta_t, p.moment);
    const std::vector<double> grid = wavepacket::default_grid(p);
    const double exact =
        propagation::exact_detector_density(p, grid).mean;
    const double first =
        wavepacket::first_order_detector_density(p, grid).mean;
    if (first == 0.0) return exact == 0.0 ? 0.0 : HUGE_VAL;
    return std::abs(exact - first) / std::abs(first);
}

LimitScan scan_limits(const ExperimentParams& base,
                      const std::vector<double>& L_grid) {
    if (L_grid.empty()) throw EmptyGrid("limit grid is empty");
    for (std::size_t i = 0; i < L_grid.size(); ++i) {
        if (!(L_grid[i] > 0.0))
            throw NonPositiveInputs("limits must be positive");
        if (i > 0 && !(L_grid[i] > L_grid[i - 1]))
            throw NonPositiveInputs("limit grid must be strictly increasing");
    }
    LimitScan scan;
    scan.L_values = L_grid;
    scan.mean_exact.reserve(L_grid.size());
    scan.mean_first_order.reserve(L_grid.size());
    scan.deviation.reserve(L_grid.size());
    for (double L : L_grid) {
        ExperimentParams p = base;
        p.dBdz = gradient_for_limit(L, p.theta, p.sigma, p.delta_t, p.moment);
        const std::vector<double> grid = wavepacket::default_grid(p);
        const double exact = propagation::exact_detector_density(p, grid).mean;
        const double first =
            wavepacket::first_order_detector_density(p, grid).mean;
        scan.mean_exact.push_back(exact);
        scan.mean_first_order.push_back(first);
        scan.deviation.push_back(
            first == 0.0 ? (exact == 0.0 ? 0.0 : HUGE_VAL)
                         : std::abs(exact - first) / std::abs(first));
    }
    return scan;
}

double max_limit_from_scan(const LimitScan& scan, double deviation_tolerance) {
    for (std::size_t i = scan.L_values.size(); i-- > 0;)
        if (scan.deviation[i] <= deviation_tolerance) return scan.L_values[i];
    throw NoValidLimit("no scanned limit stays within the tolerance");
}

double find_max_limit(const ExperimentParams& base,
                      double deviation_tolerance) {
    if (!(deviation_tolerance > 0.0) || !(deviation_tolerance < 1.0))
        throw NonPositiveInputs("deviation tolerance must lie in (0, 1)");
    const std::vector<double> grid = default_limit_grid();

    // The deviation grows with L, so bisect the grid index range.
    if (mean_deviation_at(base, grid.front()) > deviation_tolerance)
        throw NoValidLimit("even the smallest scanned limit exceeds tolerance");
    if (mean_deviation_at(base, grid.back()) <= deviation_tolerance)
        return grid.back();
    std::size_t lo = 0, hi = grid.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (mean_deviation_at(base, grid[mid]) <= deviation_tolerance)
            lo = mid;
        else
            hi = mid;
    }
    return grid[lo];
}

}  // namespace weakspin::calibration
