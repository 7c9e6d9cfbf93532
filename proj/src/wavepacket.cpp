#include "weakspin/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weakspin/spin.hpp"

namespace weakspin::wavepacket {

namespace {

// Relative weight allowed to fall outside the grid (or be lost to sampling)
// before the profile is rejected.
constexpr double weight_loss_tolerance = 1e-6;

void require_usable_grid(const std::vector<double>& z) {
    if (z.size() < 3)
        throw EmptyGrid("grid needs at least three points for quadrature");
    for (std::size_t i = 1; i < z.size(); ++i)
        if (!(z[i] > z[i - 1]))
            throw EmptyGrid("grid must be strictly increasing");
}

Moments grid_moments(const std::vector<double>& z,
                     const std::vector<double>& rho) {
    require_usable_grid(z);
    double w = 0.0, m1 = 0.0;
    for (std::size_t i = 1; i < z.size(); ++i) {
        const double dz = z[i] - z[i - 1];
        w += 0.5 * dz * (rho[i] + rho[i - 1]);
        m1 += 0.5 * dz * (z[i] * rho[i] + z[i - 1] * rho[i - 1]);
    }
    const double mean = m1 / w;
    double m2 = 0.0;
    for (std::size_t i = 1; i < z.size(); ++i) {
        const double dz = z[i] - z[i - 1];
        const double a = (z[i] - mean) * (z[i] - mean) * rho[i];
        const double b = (z[i - 1] - mean) * (z[i - 1] - mean) * rho[i - 1];
        m2 += 0.5 * dz * (a + b);
    }
    return Moments{mean, std::sqrt(m2 / w), w};
}

DetectorProfile finish_profile(std::vector<double> z, std::vector<double> rho,
                               double analytic_weight, double limit) {
    const Moments m = grid_moments(z, rho);
    if (analytic_weight > 0.0 &&
        std::abs(m.weight - analytic_weight) >
            weight_loss_tolerance * analytic_weight)
        throw GridTooNarrow(
            "grid loses more than 1e-6 of the density weight; widen it");
    DetectorProfile profile;
    profile.z_grid = std::move(z);
    profile.density = std::move(rho);
    profile.mean = m.mean;
    profile.rms_width = m.rms;
    profile.peak = *std::max_element(profile.density.begin(),
                                     profile.density.end());
    profile.total_weight = m.weight;
    profile.limit = limit;
    return profile;
}

}  // namespace

WavePacket initial_packet(double sigma) {
    if (!(sigma > 0.0)) throw NonPositiveWidth("sigma must be positive");
    return WavePacket{sigma};
}

double spread_at(const WavePacket& packet, double t, double mass) {
    const double tau =
        constants().hbar * t / (2.0 * mass * packet.sigma * packet.sigma);
    return packet.sigma * std::sqrt(1.0 + tau * tau);
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) throw EmptyGrid("grid span is degenerate");
    std::vector<double> z(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = lo + step * static_cast<double>(i);
    return z;
}

double first_order_mean(const ExperimentParams& params) {
    const spin::WeakValue w = spin::weak_value(params.theta, params.phi);
    const double t = params.flight_time();
    const double st = spread_at(WavePacket{params.sigma}, t, params.mass);
    const double gain =
        2.0 * w.im() * params.moment * params.delta_t / constants().hbar;
    return -params.kick_velocity() * t * w.re() + gain * params.dBdz * st * st;
}

double validity_ratio(const ExperimentParams& params) {
    const spin::WeakValue w = spin::weak_value(params.theta, params.phi);
    return std::abs(params.phase_angle_at(params.sigma)) * std::abs(w.value);
}

std::vector<double> default_grid(const ExperimentParams& params, std::size_t n,
                                 double halfwidths) {
    params.validate();
    const double t = params.flight_time();
    const double st = spread_at(WavePacket{params.sigma}, t, params.mass);
    const double split = std::abs(params.kick_velocity()) * t;
    double shift = 0.0;
    if (!spin::selection_orthogonal(params.theta, params.phi))
        shift = first_order_mean(params);
    const double lo = std::min(-split, shift) - halfwidths * st;
    const double hi = std::max(split, shift) + halfwidths * st;
    return linear_grid(lo, hi, n);
}

DetectorProfile first_order_detector_density(
    const ExperimentParams& params, const std::vector<double>& z_grid) {
    params.validate();
    require_usable_grid(z_grid);
    const spin::WeakValue w = spin::weak_value(params.theta, params.phi);
    const double probability =
        std::norm(spin::inner(spin::post_selector(),
                              spin::make_spinor(params.theta, params.phi)));
    const double t = params.flight_time();
    const double st = spread_at(WavePacket{params.sigma}, t, params.mass);
    const double centre = -params.kick_velocity() * t * w.re();
    const double gain =
        2.0 * w.im() * params.moment * params.delta_t / constants().hbar;
    const double norm = probability / (std::sqrt(2.0 * std::numbers::pi) * st);

    std::vector<double> rho(z_grid.size());
    for (std::size_t i = 0; i < z_grid.size(); ++i) {
        const double z = z_grid[i];
        const double arg = -(z - centre) * (z - centre) / (2.0 * st * st) +
                           gain * (params.B0 + params.dBdz * z);
        rho[i] = norm * std::exp(arg);
    }

    // The linear exponent keeps the density Gaussian, so the full weight has
    // a closed form to check coverage against.
    const double c = gain * params.dBdz;
    const double analytic_weight =
        probability * std::exp(gain * params.B0 + c * centre +
                               0.5 * c * c * st * st);
    return finish_profile(z_grid, std::move(rho), analytic_weight,
                          validity_ratio(params));
}

DetectorProfile first_order_detector_density(const ExperimentParams& params) {
    return first_order_detector_density(params, default_grid(params));
}

Moments profile_moments(const DetectorProfile& profile) {
    return grid_moments(profile.z_grid, profile.density);
}

}  // namespace weakspin::wavepacket
