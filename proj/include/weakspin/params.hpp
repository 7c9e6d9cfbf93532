#pragma once

#include "weakspin/constants.hpp"
#include "weakspin/errors.hpp"

namespace weakspin {

// Every physical knob of one run, SI units throughout. Defaults are the
// headline beam geometry (room-temperature supersonic metastable helium).
struct ExperimentParams {
    double theta = 2.9;  // pre-selection polar angle, rad
    double phi = 0.0;    // pre-selection azimuthal angle, rad
    double B0 = 0.0;     // homogeneous field inside the weak stage, T
    double dBdz = 0.0;   // field gradient inside the weak stage, T/m
    double delta_t = 0.0;           // time spent inside the weak stage, s
    double sigma = 0.5e-6;          // beam width entering the weak stage, m
    double flight_distance = 2.5;   // weak-stage exit to detector, m
    double beam_velocity = 1717.0;  // m/s
    double mass = constants().helium4_mass;            // kg
    double moment = constants().metastable_he_moment;  // J/T

    double flight_time() const { return flight_distance / beam_velocity; }

    // Momentum kick per magnetic quantum number as a wave number, 1/m.
    // The m-th component picks up momentum -m * moment * delta_t * dBdz.
    double kick_wavenumber() const {
        return moment * delta_t * dBdz / constants().hbar;
    }

    // Transverse velocity acquired per unit magnetic quantum number, m/s.
    double kick_velocity() const { return moment * delta_t * dBdz / mass; }

    // Dimensionless spin phase angle accumulated at position z inside the
    // weak stage: moment * delta_t * (B0 + dBdz * z) / hbar.
    double phase_angle_at(double z) const {
        return moment * delta_t * (B0 + dBdz * z) / constants().hbar;
    }

    void validate() const {
        if (!(sigma > 0.0)) throw NonPositiveWidth("sigma must be positive");
        if (!(delta_t >= 0.0))
            throw NonPositiveInputs("delta_t must be non-negative");
        if (!(flight_distance >= 0.0))
            throw NonPositiveInputs("flight_distance must be non-negative");
        if (!(beam_velocity > 0.0))
            throw NonPositiveInputs("beam_velocity must be positive");
        if (!(mass > 0.0)) throw NonPositiveInputs("mass must be positive");
        if (!(moment > 0.0)) throw NonPositiveInputs("moment must be positive");
    }
};

}  // namespace weakspin
