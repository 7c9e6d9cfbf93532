#pragma once

#include <utility>
#include <vector>

#include "weakspin/params.hpp"

namespace weakspin::planner {

// Artifact default only (typical micro-channel-plate pore-limited
// resolution), not a measured property of any detector.
inline constexpr double default_detector_pitch = 25e-6;  // m

struct PlanResult {
    double displacement;  // m
    double limit;         // dimensionless
    double evolved_width; // m
    double post_selection_probability;  // dimensionless
    double detector_pitch;              // m
    double margin;                      // displacement / pitch
    bool resolvable;
};

struct Resolvability {
    bool resolvable;
    double margin;
};

struct VelocityRow {
    double velocity;       // m/s
    double displacement;   // m
    double evolved_width;  // m
    double peak_density;   // 1/m
};

struct ThetaRow {
    double theta;         // rad
    double displacement;  // m
    double gradient;      // T/m in effect for this row
    double limit;         // dimensionless
    double post_selection_probability;
    bool inequalities_hold;
};

// Beam displacement hbar * (d / v) * L / (sigma * mass). L = 0 maps to 0;
// negative L or bad geometry throws NonPositiveInputs.
double displacement(const ExperimentParams& params, double L);

// The same displacement from the field parameters,
// moment * dBdz * delta_t * t / mass * tan(theta/2), and from the
// gradient-only limit; the two agree to rounding. Throws TanPole.
std::pair<double, double> displacement_two_ways(const ExperimentParams& params);

Resolvability resolvability(const PlanResult& plan, double detector_pitch);

// Per-velocity displacement, evolved width and first-order peak density at a
// fixed limit. Throws NonPositiveInputs on non-positive velocities.
std::vector<VelocityRow> velocity_sweep(const ExperimentParams& params,
                                        const std::vector<double>& v_grid,
                                        double L);

// When hold_L_fixed, the gradient is re-solved per theta and the displacement
// stays constant; otherwise the field is fixed, the displacement follows
// tan(theta/2), and the smallness flags report where the expansion fails.
std::vector<ThetaRow> theta_sweep(const ExperimentParams& params,
                                  const std::vector<double>& theta_grid,
                                  bool hold_L_fixed);

PlanResult plan(const ExperimentParams& params, double L,
                double detector_pitch = default_detector_pitch);

}  // namespace weakspin::planner
