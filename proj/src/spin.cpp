#include "weakspin/spin.hpp"

#include <cmath>
#include <numbers>

namespace weakspin::spin {

namespace {

constexpr complexd I{0.0, 1.0};

// |<post|pre(theta, phi)>| reduces algebraically to |1 + cos(phi) cos(theta)| / 2.
double overlap_magnitude(double theta, double phi) {
    return std::abs(1.0 + std::cos(phi) * std::cos(theta)) / 2.0;
}

}  // namespace

double Spinor3::norm_squared() const {
    return std::norm(c_plus) + std::norm(c_zero) + std::norm(c_minus);
}

SpinMatrices spin_matrices() {
    const double r = 1.0 / std::numbers::sqrt2;
    SpinMatrices m{};
    m.sx = {{{0.0, r, 0.0}, {r, 0.0, r}, {0.0, r, 0.0}}};
    m.sy = {{{0.0, -r * I, 0.0}, {r * I, 0.0, -r * I}, {0.0, r * I, 0.0}}};
    m.sz = {{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}}};
    return m;
}

Spinor3 make_spinor(double theta, double phi) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return Spinor3{
        0.5 * (1.0 + s) * std::exp(-I * phi),
        c / std::numbers::sqrt2,
        0.5 * (1.0 - s) * std::exp(I * phi),
    };
}

Spinor3 post_selector() {
    return Spinor3{0.5, 1.0 / std::numbers::sqrt2, 0.5};
}

complexd inner(const Spinor3& bra, const Spinor3& ket) {
    return std::conj(bra.c_plus) * ket.c_plus +
           std::conj(bra.c_zero) * ket.c_zero +
           std::conj(bra.c_minus) * ket.c_minus;
}

Spinor3 apply(const Matrix3c& m, const Spinor3& s) {
    const std::array<complexd, 3> v{s.c_plus, s.c_zero, s.c_minus};
    std::array<complexd, 3> out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r] += m[r][c] * v[c];
    return Spinor3{out[0], out[1], out[2]};
}

complexd matrix_element(const Spinor3& bra, const Matrix3c& m,
                        const Spinor3& ket) {
    return inner(bra, apply(m, ket));
}

bool selection_orthogonal(double theta, double phi) {
    return overlap_magnitude(theta, phi) <= orthogonality_epsilon;
}

WeakValue weak_value(double theta, double phi) {
    if (selection_orthogonal(theta, phi))
        throw OrthogonalSelection(
            "pre- and post-selected states are orthogonal; weak value diverges");
    const double denom = 1.0 + std::cos(phi) * std::cos(theta);
    return WeakValue{complexd{std::sin(theta) / denom,
                              -std::sin(phi) * std::cos(theta) / denom}};
}

complexd weak_value_ratio_check(double theta, double phi) {
    const Spinor3 ket = make_spinor(theta, phi);
    const Spinor3 bra = post_selector();
    const complexd denom = inner(bra, ket);
    if (std::abs(denom) <= orthogonality_epsilon)
        throw OrthogonalSelection(
            "pre- and post-selected states are orthogonal; weak value diverges");
    const complexd ratio = matrix_element(bra, spin_matrices().sz, ket) / denom;
    return ratio - weak_value(theta, phi).value;
}

}  // namespace weakspin::spin
