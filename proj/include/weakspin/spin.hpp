#pragma once

#include <array>
#include <complex>

#include "weakspin/errors.hpp"

namespace weakspin::spin {

using complexd = std::complex<double>;
using Matrix3c = std::array<std::array<complexd, 3>, 3>;

// Selections closer to orthogonality than this are treated as divergent.
inline constexpr double orthogonality_epsilon = 1e-12;

// Spin-1 state in the z basis, components ordered m = +1, 0, -1.
struct Spinor3 {
    complexd c_plus;
    complexd c_zero;
    complexd c_minus;

    double norm_squared() const;
};

// Dimensionless spin-1 operators with sz = diag(1, 0, -1); hbar enters the
// phase expressions elsewhere, never these matrices.
struct SpinMatrices {
    Matrix3c sx;
    Matrix3c sy;
    Matrix3c sz;
};

struct WeakValue {
    complexd value;  // dimensionless spin units

    double re() const { return value.real(); }
    double im() const { return value.imag(); }
};

SpinMatrices spin_matrices();

// Pre-selection spinor polarised at polar angle theta in the x-z plane and
// azimuthal angle phi. Angles are unrestricted; periodicity handles range.
Spinor3 make_spinor(double theta, double phi);

// Fixed post-selection bra: the x-basis m = +1 state (1/2, 1/sqrt2, 1/2).
Spinor3 post_selector();

// Conjugate-linear in bra, linear in ket.
complexd inner(const Spinor3& bra, const Spinor3& ket);

Spinor3 apply(const Matrix3c& m, const Spinor3& s);
complexd matrix_element(const Spinor3& bra, const Matrix3c& m,
                        const Spinor3& ket);

// True when |<post|pre(theta, phi)>| <= orthogonality_epsilon.
bool selection_orthogonal(double theta, double phi);

// Weak value of sz between pre-selection (theta, phi) and the fixed
// post-selector, from the closed forms
//   Re W = sin(theta) / (1 + cos(phi) cos(theta))
//   Im W = -sin(phi) cos(theta) / (1 + cos(phi) cos(theta)).
// Throws OrthogonalSelection when the transition amplitude vanishes.
WeakValue weak_value(double theta, double phi);

// Recomputes W as the matrix-element ratio <f|sz|i> / <f|i> and returns the
// difference from the closed form; used as an internal oracle.
complexd weak_value_ratio_check(double theta, double phi);

}  // namespace weakspin::spin
