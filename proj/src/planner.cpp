#include "weakspin/planner.hpp"

#include <cmath>
#include <numbers>

#include "weakspin/calibration.hpp"
#include "weakspin/propagation.hpp"
#include "weakspin/spin.hpp"
#include "weakspin/wavepacket.hpp"

namespace weakspin::planner {

namespace {

double post_selection_probability(const ExperimentParams& params) {
    return std::norm(spin::inner(spin::post_selector(),
                                 spin::make_spinor(params.theta, params.phi)));
}

double evolved_width(const ExperimentParams& params) {
    return wavepacket::spread_at(wavepacket::WavePacket{params.sigma},
                                 params.flight_time(), params.mass);
}

}  // namespace

double displacement(const ExperimentParams& params, double L) {
    params.validate();
    if (L < 0.0) throw NonPositiveInputs("limit must be non-negative");
    return constants().hbar * params.flight_time() * L /
           (params.sigma * params.mass);
}

std::pair<double, double> displacement_two_ways(const ExperimentParams& params) {
    params.validate();
    const double L = calibration::limit_gradient_only(params);
    const double t = params.flight_time();
    const double limit_form =
        constants().hbar * t * L / (params.sigma * params.mass);
    const double field_form = params.moment * params.dBdz * params.delta_t * t /
                              params.mass * std::tan(params.theta / 2.0);
    return {field_form, limit_form};
}

Resolvability resolvability(const PlanResult& plan, double detector_pitch) {
    if (!(detector_pitch > 0.0))
        throw NonPositiveInputs("detector pitch must be positive");
    const double margin = plan.displacement / detector_pitch;
    return Resolvability{margin >= 1.0, margin};
}

std::vector<VelocityRow> velocity_sweep(const ExperimentParams& params,
                                        const std::vector<double>& v_grid,
                                        double L) {
    params.validate();
    const double probability = post_selection_probability(params);
    std::vector<VelocityRow> rows;
    rows.reserve(v_grid.size());
    for (double v : v_grid) {
        if (!(v > 0.0))
            throw NonPositiveInputs("velocities must be positive");
        ExperimentParams p = params;
        p.beam_velocity = v;
        const double width = evolved_width(p);
        rows.push_back(VelocityRow{
            v, displacement(p, L), width,
            probability / (std::sqrt(2.0 * std::numbers::pi) * width)});
    }
    return rows;
}

std::vector<ThetaRow> theta_sweep(const ExperimentParams& params,
                                  const std::vector<double>& theta_grid,
                                  bool hold_L_fixed) {
    params.validate();
    const double held_limit =
        hold_L_fixed ? calibration::limit_gradient_only(params) : 0.0;
    const double threshold = 0.1;
    std::vector<ThetaRow> rows;
    rows.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        if (!(theta > 0.0) || !(theta < std::numbers::pi))
            throw TanPole("theta must lie in (0, pi)");
        ExperimentParams p = params;
        p.theta = theta;
        if (hold_L_fixed)
            p.dBdz = calibration::gradient_for_limit(held_limit, theta, p.sigma,
                                                     p.delta_t, p.moment);
        const double t = p.flight_time();
        const double shift = p.moment * p.dBdz * p.delta_t * t / p.mass *
                             std::tan(theta / 2.0);
        const propagation::InequalityReport report =
            propagation::check_inequalities(p, 4, threshold);
        rows.push_back(ThetaRow{theta, shift, p.dBdz,
                                calibration::limit_gradient_only(p),
                                post_selection_probability(p),
                                report.all_hold && report.limit < threshold});
    }
    return rows;
}

PlanResult plan(const ExperimentParams& params, double L,
                double detector_pitch) {
    params.validate();
    if (!(detector_pitch > 0.0))
        throw NonPositiveInputs("detector pitch must be positive");
    PlanResult result;
    result.displacement = displacement(params, L);
    result.limit = L;
    result.evolved_width = evolved_width(params);
    result.post_selection_probability = post_selection_probability(params);
    result.detector_pitch = detector_pitch;
    result.margin = result.displacement / detector_pitch;
    result.resolvable = result.margin >= 1.0;
    return result;
}

}  // namespace weakspin::planner
