#pragma once

#include <array>
#include <vector>

#include "weakspin/params.hpp"
#include "weakspin/spin.hpp"
#include "weakspin/wavepacket.hpp"

namespace weakspin::propagation {

using spin::complexd;
using wavepacket::DetectorProfile;
using wavepacket::WavePacket;

// Spin-1 particle as one Gaussian envelope per magnetic quantum number,
// ordered m = +1, 0, -1 like Spinor3. The spinor coefficients live in
// `weights`; kicks and phases live in the envelopes.
struct SpinorPacket {
    std::array<complexd, 3> weights;
    std::array<WavePacket, 3> envelopes;

    // Sum over |weight_m|^2 times the (unit) envelope norms.
    double norm_squared() const;
};

// Scalar superposition left after projecting onto a spin bra. `weight` is
// the magnitude of the spin-sector overlap sum_m conj(bra_m) weight_m; the
// envelope kicks and phases stay in the components.
struct ScalarPacket {
    std::array<complexd, 3> amplitudes;
    std::array<WavePacket, 3> envelopes;
    double weight = 0.0;
};

SpinorPacket make_spinor_packet(const spin::Spinor3& state, double sigma);

// Impulsive weak stage: component m picks up momentum
// -m * moment * delta_t * dBdz and phase -m * moment * delta_t * B0 / hbar;
// the m = 0 component and all spatial envelopes are otherwise unchanged.
SpinorPacket apply_weak_stage(const SpinorPacket& packet,
                              const ExperimentParams& params);

ScalarPacket post_select(const SpinorPacket& packet, const spin::Spinor3& bra);

// Exact norm of the scalar superposition from pairwise Gaussian overlaps;
// free evolution leaves it invariant.
double analytic_norm(const ScalarPacket& packet, double mass);

// Detector density with no expansion in the field: each post-selected
// component evolves analytically as a kicked Gaussian for t = d / v and the
// superposition is squared on the grid, interference included.
// Throws EmptyGrid, GridTooNarrow.
DetectorProfile exact_detector_density(const ExperimentParams& params,
                                       const std::vector<double>& z_grid);
DetectorProfile exact_detector_density(const ExperimentParams& params);

// Post-selected spin amplitude <f| exp(-i chi sz) |i> with the field phase
// chi evaluated at z = sigma.
complexd exact_selection_amplitude(const ExperimentParams& params);

// Taylor partial sum of the same amplitude through the given order.
complexd truncated_expansion_amplitude(const ExperimentParams& params,
                                       int order);

struct InequalityRow {
    int order;                  // n
    double versus_overlap;      // |chi^n <f|sz^n|i>| / |<f|i>|
    double versus_first_order;  // |chi^n <f|sz^n|i>| / |chi <f|sz|i>|
    bool holds;                 // both ratios below the threshold
};

struct InequalityReport {
    double limit;      // |chi W|, the first-order validity ratio
    double threshold;  // operational meaning of "much less than"
    std::vector<InequalityRow> rows;  // n = 2 .. n_max
    bool all_hold;
};

// Evaluates the smallness conditions behind the first-order expansion for
// n = 2 .. n_max, with chi taken at z = sigma.
// Throws NonPositiveInputs (n_max < 2), OrthogonalSelection.
InequalityReport check_inequalities(const ExperimentParams& params, int n_max,
                                    double threshold = 0.1);

}  // namespace weakspin::propagation
