#pragma once

#include <cstddef>
#include <vector>

#include "weakspin/params.hpp"

namespace weakspin::wavepacket {

// One-dimensional Gaussian centre-of-mass state,
// psi(z, 0) = (2 pi sigma^2)^(-1/4) exp(-(z - mean)^2 / (4 sigma^2)),
// optionally carrying a transverse velocity kick and a global phase.
struct WavePacket {
    double sigma;                // m
    double mean = 0.0;           // m
    double velocity_kick = 0.0;  // m/s
    double global_phase = 0.0;   // rad
};

// Sampled detector-plane probability density with quadrature moments.
struct DetectorProfile {
    std::vector<double> z_grid;   // m
    std::vector<double> density;  // 1/m
    double mean = 0.0;            // m
    double rms_width = 0.0;       // m
    double peak = 0.0;            // 1/m
    double total_weight = 0.0;    // dimensionless
    double limit = 0.0;           // first-order validity ratio metadata
};

struct Moments {
    double mean;    // m
    double rms;     // m
    double weight;  // dimensionless
};

// Unit-norm Gaussian at rest. Throws NonPositiveWidth.
WavePacket initial_packet(double sigma);

// Free-evolution width sigma * sqrt(1 + hbar^2 t^2 / (4 m^2 sigma^4)).
double spread_at(const WavePacket& packet, double t, double mass);

std::vector<double> linear_grid(double lo, double hi, std::size_t n);

// Grid wide enough for both the first-order profile and the three displaced
// components of the exact one: covers the shifted mean and +-|u| t, padded by
// `halfwidths` evolved widths on each side.
std::vector<double> default_grid(const ExperimentParams& params,
                                 std::size_t n = 4096,
                                 double halfwidths = 8.0);

// Closed-form centre of the first-order detector density,
// -u t Re W + 2 Im W (moment delta_t / hbar) dBdz sigma_t^2.
double first_order_mean(const ExperimentParams& params);

// Validity ratio of the first-order approximation at these parameters:
// |moment delta_t (B0 + dBdz sigma) / hbar| * |W(theta, phi)|. Reduces to
// the tan(theta/2) form at phi = 0.
double validity_ratio(const ExperimentParams& params);

// First-order detector density
//   |<f|i>|^2 N(z; -u t Re W, sigma_t)
//     * exp(2 Im W (moment delta_t / hbar) (B0 + dBdz z)),
// where u is the transverse kick velocity and sigma_t the evolved width.
// Throws OrthogonalSelection, EmptyGrid, GridTooNarrow.
DetectorProfile first_order_detector_density(const ExperimentParams& params,
                                             const std::vector<double>& z_grid);
DetectorProfile first_order_detector_density(const ExperimentParams& params);

// Trapezoidal-quadrature moments of a stored profile. Throws EmptyGrid when
// the grid has fewer than three points or is not strictly increasing.
Moments profile_moments(const DetectorProfile& profile);

}  // namespace weakspin::wavepacket
