#pragma once

namespace weakspin {

// Physical constants in SI units (CODATA 2018). Everything downstream
// computes in SI; semantic types carry unit labels in documentation only.
struct PhysicalConstants {
    double hbar;                  // J s
    double bohr_magneton;         // J/T
    double amu;                   // kg
    double helium4_mass;          // kg
    double metastable_he_moment;  // J/T
};

constexpr PhysicalConstants constants() {
    constexpr double hbar = 1.054571817e-34;
    constexpr double bohr_magneton = 9.2740100783e-24;
    constexpr double amu = 1.66053906660e-27;
    return PhysicalConstants{
        hbar,
        bohr_magneton,
        amu,
        // He-4 atomic mass; the metastable electronic excitation changes the
        // mass at the 1e-9 level, far below anything measured here.
        4.002602 * amu,
        // triplet metastable helium carries two Bohr magnetons
        2.0 * bohr_magneton,
    };
}

}  // namespace weakspin
