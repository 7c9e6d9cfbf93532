#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "weakspin/errors.hpp"
#include "weakspin/spin.hpp"

namespace sp = weakspin::spin;
using sp::complexd;

namespace {

const double pi = std::numbers::pi;

double max_abs_diff(const sp::Matrix3c& a, const sp::Matrix3c& b) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

sp::Matrix3c commutator(const sp::Matrix3c& a, const sp::Matrix3c& b) {
    sp::Matrix3c ab{};
    sp::Matrix3c ba{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            complexd s1 = 0.0;
            complexd s2 = 0.0;
            for (int k = 0; k < 3; ++k) {
                s1 += a[i][k] * b[k][j];
                s2 += b[i][k] * a[k][j];
            }
            ab[i][j] = s1;
            ba[i][j] = s2;
        }
    sp::Matrix3c out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = ab[i][j] - ba[i][j];
    return out;
}

sp::Matrix3c scale(const sp::Matrix3c& a, complexd f) {
    sp::Matrix3c out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = f * a[i][j];
    return out;
}

bool is_hermitian(const sp::Matrix3c& a) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(a[i][j] - std::conj(a[j][i])) > 1e-15) return false;
    return true;
}

}  // namespace

TEST_SUITE("spin") {

TEST_CASE("pre-selected spinor hits its closed-form components") {
    const sp::Spinor3 up = sp::make_spinor(pi / 2.0, 0.0);
    CHECK(std::abs(up.c_plus - complexd{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(up.c_zero) < 1e-15);
    CHECK(std::abs(up.c_minus) < 1e-15);

    const sp::Spinor3 x = sp::make_spinor(0.0, 0.0);
    CHECK(std::abs(x.c_plus - complexd{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(x.c_zero - complexd{1.0 / std::numbers::sqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(x.c_minus - complexd{0.5, 0.0}) < 1e-15);
}

TEST_CASE("pre-selected spinor is normalized for random angles") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> th(0.0, pi);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
    for (int i = 0; i < 1000; ++i) {
        const sp::Spinor3 s = sp::make_spinor(th(rng), ph(rng));
        CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("post-selector components and normalization") {
    const sp::Spinor3 f = sp::post_selector();
    CHECK(std::abs(f.c_plus - complexd{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(f.c_zero - complexd{1.0 / std::numbers::sqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(f.c_minus - complexd{0.5, 0.0}) < 1e-15);
    CHECK(f.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
    // Identical to the theta = 0 pre-selection, so the overlap is exactly 1.
    CHECK(std::abs(sp::inner(f, sp::make_spinor(0.0, 0.0)) - 1.0) < 1e-15);
}

TEST_CASE("selection overlap matches its closed form") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> th(0.0, pi);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
    const sp::Spinor3 bra = sp::post_selector();
    for (int i = 0; i < 500; ++i) {
        const double theta = th(rng);
        const double phi = ph(rng);
        const complexd got = sp::inner(bra, sp::make_spinor(theta, phi));
        const complexd want{(std::cos(phi) + std::cos(theta)) / 2.0,
                            -std::sin(phi) * std::sin(theta) / 2.0};
        CHECK(std::abs(got - want) < 1e-14);
        const double p = std::norm(got);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0 + 1e-15);
    }
    CHECK(std::abs(sp::inner(bra, sp::make_spinor(pi, 0.0))) < 1e-15);
}

TEST_CASE("spin matrices are hermitian with the right algebra") {
    const sp::SpinMatrices m = sp::spin_matrices();
    CHECK(is_hermitian(m.sx));
    CHECK(is_hermitian(m.sy));
    CHECK(is_hermitian(m.sz));

    CHECK(m.sz[0][0] == complexd{1.0, 0.0});
    CHECK(m.sz[1][1] == complexd{0.0, 0.0});
    CHECK(m.sz[2][2] == complexd{-1.0, 0.0});
    CHECK(std::abs(m.sz[0][1]) == 0.0);
    CHECK(std::abs(m.sz[1][2]) == 0.0);

    const complexd i_unit{0.0, 1.0};
    CHECK(max_abs_diff(commutator(m.sx, m.sy), scale(m.sz, i_unit)) < 1e-15);
    CHECK(max_abs_diff(commutator(m.sy, m.sz), scale(m.sx, i_unit)) < 1e-15);
    CHECK(max_abs_diff(commutator(m.sz, m.sx), scale(m.sy, i_unit)) < 1e-15);
}

TEST_CASE("z matrix has the fully polarized state as eigenvector") {
    const sp::SpinMatrices m = sp::spin_matrices();
    const sp::Spinor3 up{1.0, 0.0, 0.0};
    const sp::Spinor3 out = sp::apply(m.sz, up);
    CHECK(std::abs(out.c_plus - complexd{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(out.c_zero) < 1e-15);
    CHECK(std::abs(out.c_minus) < 1e-15);
}

TEST_CASE("weak value closed form at reference angles") {
    const sp::WeakValue nearly_flipped = sp::weak_value(2.9, 0.0);
    CHECK(nearly_flipped.re() == doctest::Approx(std::tan(1.45)).epsilon(1e-14));
    CHECK(nearly_flipped.re() == doctest::Approx(8.2380927530).epsilon(1e-9));
    CHECK(nearly_flipped.im() == 0.0);

    const sp::WeakValue orthogonal_axis = sp::weak_value(pi / 2.0, 0.0);
    CHECK(orthogonal_axis.re() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(orthogonal_axis.im()) < 1e-15);
}

TEST_CASE("weak value throws on an orthogonal selection") {
    CHECK_THROWS_AS(sp::weak_value(pi, 0.0), weakspin::OrthogonalSelection);
}

TEST_CASE("real part reduces to the half-angle tangent at zero azimuth") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> th(1e-6, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const double theta = th(rng);
        const sp::WeakValue w = sp::weak_value(theta, 0.0);
        CHECK(std::abs(w.re() - std::tan(theta / 2.0)) <= 1e-12 * std::max(1.0, std::abs(w.re())));
        CHECK(w.im() == 0.0);
    }
}

TEST_CASE("matrix-element route agrees with the closed form") {
    CHECK(std::abs(sp::weak_value_ratio_check(1.0, 0.7)) < 1e-12);
    CHECK(std::abs(sp::weak_value_ratio_check(2.9, pi / 2.0)) < 1e-12);

    // theta = 0 pre-selection is the post-selector itself: weak value is 0.
    const sp::WeakValue w0 = sp::weak_value(0.0, 0.0);
    CHECK(std::abs(w0.value) == 0.0);
    CHECK(std::abs(sp::weak_value_ratio_check(0.0, 0.0)) == 0.0);
}

TEST_CASE("matrix-element route agrees across a dense angle grid") {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double theta = 0.2 + (2.8 - 0.2) * i / 99.0;
        for (int j = 0; j < 100; ++j) {
            const double phi = 2.0 * pi * j / 100.0;
            worst = std::max(worst, std::abs(sp::weak_value_ratio_check(theta, phi)));
        }
    }
    CHECK(worst < 1e-12);
}

}  // TEST_SUITE
