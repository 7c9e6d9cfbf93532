#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "weakspin/calibration.hpp"
#include "weakspin/config.hpp"
#include "weakspin/constants.hpp"
#include "weakspin/errors.hpp"
#include "weakspin/planner.hpp"
#include "weakspin/spin.hpp"
#include "weakspin/wavepacket.hpp"

namespace pl = weakspin::planner;
namespace wp = weakspin::wavepacket;
namespace cal = weakspin::calibration;
using weakspin::ExperimentParams;
using weakspin::constants;

namespace {

ExperimentParams beam_at(double velocity) {
    ExperimentParams p;
    p.sigma = 0.5e-6;
    p.flight_distance = 2.5;
    p.beam_velocity = velocity;
    return p;
}

ExperimentParams headline_params() {
    return weakspin::io::default_run_config().to_params();
}

}  // namespace

TEST_SUITE("planner") {

TEST_CASE("displacement reference values across beam velocities") {
    CHECK(pl::displacement(beam_at(1717.0), 0.37) ==
          doctest::Approx(1.7095669e-5).epsilon(1e-6));
    CHECK(pl::displacement(beam_at(1200.0), 0.37) ==
          doctest::Approx(2.4461052e-5).epsilon(1e-6));
    CHECK(pl::displacement(beam_at(900.0), 0.37) ==
          doctest::Approx(3.2614737e-5).epsilon(1e-6));
}

TEST_CASE("displacement edge cases") {
    CHECK(pl::displacement(beam_at(1717.0), 0.0) == 0.0);
    CHECK_THROWS_AS(pl::displacement(beam_at(1717.0), -0.1),
                    weakspin::NonPositiveInputs);
    ExperimentParams bad = beam_at(1717.0);
    bad.sigma = 0.0;
    CHECK_THROWS_AS(pl::displacement(bad, 0.37), weakspin::NonPositiveWidth);
}

TEST_CASE("halving the velocity doubles the displacement") {
    const double slow = pl::displacement(beam_at(858.5), 0.37);
    const double fast = pl::displacement(beam_at(1717.0), 0.37);
    CHECK(slow == doctest::Approx(2.0 * fast).epsilon(1e-12));
}

TEST_CASE("displacement times velocity times width is constant at fixed limit") {
    const double L = 0.42;
    double reference = 0.0;
    bool first = true;
    for (auto [v, sigma] : {std::pair{900.0, 0.4e-6}, std::pair{1341.0, 0.9e-6},
                            std::pair{2100.0, 1.7e-6}}) {
        ExperimentParams p = beam_at(v);
        p.sigma = sigma;
        const double product = pl::displacement(p, L) * v * sigma;
        if (!first) CHECK(product == doctest::Approx(reference).epsilon(1e-12));
        reference = product;
        first = false;
    }
}

TEST_CASE("field form and limit form of the displacement coincide") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> thetad(0.1, 3.0);
    std::uniform_real_distribution<double> sigmad(0.1e-6, 2e-6);
    std::uniform_real_distribution<double> gradd(0.01, 10.0);
    std::uniform_real_distribution<double> dtd(1e-7, 1e-4);
    std::uniform_real_distribution<double> distd(0.5, 5.0);
    std::uniform_real_distribution<double> vd(500.0, 3000.0);
    for (int i = 0; i < 1000; ++i) {
        ExperimentParams p;
        p.theta = thetad(rng);
        p.sigma = sigmad(rng);
        p.dBdz = gradd(rng);
        p.delta_t = dtd(rng);
        p.flight_distance = distd(rng);
        p.beam_velocity = vd(rng);
        const auto [from_limit, from_field] = pl::displacement_two_ways(p);
        CHECK(from_limit == doctest::Approx(from_field).epsilon(1e-10));
    }

    const auto [a, b] = pl::displacement_two_ways(headline_params());
    CHECK(a == doctest::Approx(1.7095669e-5).epsilon(1e-6));
    CHECK(b == doctest::Approx(1.7095669e-5).epsilon(1e-6));
}

TEST_CASE("the displacement depends on the field only through the limit") {
    ExperimentParams p = headline_params();
    const auto [base, base_field] = pl::displacement_two_ways(p);
    CHECK(base == doctest::Approx(base_field).epsilon(1e-12));

    // doubling the gradient while shrinking the tilt to keep L fixed
    ExperimentParams q = p;
    q.dBdz = 2.0 * p.dBdz;
    q.theta = 2.0 * std::atan(std::tan(p.theta / 2.0) / 2.0);
    CHECK(cal::limit_gradient_only(q) ==
          doctest::Approx(cal::limit_gradient_only(p)).epsilon(1e-12));
    const auto [kept, kept_field] = pl::displacement_two_ways(q);
    CHECK(kept == doctest::Approx(base).epsilon(1e-12));
    CHECK(kept_field == doctest::Approx(base_field).epsilon(1e-12));
}

TEST_CASE("velocity sweep reproduces the per-velocity reference values") {
    const ExperimentParams p = headline_params();
    const std::vector<double> grid{900.0, 1200.0, 1717.0};
    const auto rows = pl::velocity_sweep(p, grid, 0.37);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].velocity == 900.0);
    CHECK(rows[0].displacement == doctest::Approx(3.2614737e-5).epsilon(1e-6));
    CHECK(rows[1].displacement == doctest::Approx(2.4461052e-5).epsilon(1e-6));
    CHECK(rows[2].displacement == doctest::Approx(1.7095669e-5).epsilon(1e-6));

    CHECK(rows[0].displacement * 900.0 ==
          doctest::Approx(rows[2].displacement * 1717.0).epsilon(1e-12));

    for (const auto& row : rows) {
        const double t = p.flight_distance / row.velocity;
        const double width =
            wp::spread_at(wp::initial_packet(p.sigma), t, p.mass);
        CHECK(row.evolved_width == doctest::Approx(width).epsilon(1e-12));
        const auto bra = weakspin::spin::post_selector();
        const auto ket = weakspin::spin::make_spinor(p.theta, p.phi);
        const double prob = std::norm(weakspin::spin::inner(bra, ket));
        CHECK(row.peak_density ==
              doctest::Approx(prob / (std::sqrt(2.0 * std::numbers::pi) * width))
                  .epsilon(1e-12));
    }

    CHECK(pl::velocity_sweep(p, {}, 0.37).empty());
    CHECK_THROWS_AS(pl::velocity_sweep(p, {900.0, -1.0}, 0.37),
                    weakspin::NonPositiveInputs);
}

TEST_CASE("slower beams have wider but still taller-shifted profiles") {
    const ExperimentParams p = headline_params();
    const auto rows = pl::velocity_sweep(p, {900.0, 1200.0, 1717.0}, 0.37);
    CHECK(rows[0].displacement > rows[1].displacement);
    CHECK(rows[1].displacement > rows[2].displacement);
    CHECK(rows[0].evolved_width > rows[2].evolved_width);
    CHECK(rows[0].peak_density < rows[2].peak_density);
}

TEST_CASE("resolvability against the detector pitch") {
    const ExperimentParams p = headline_params();
    const pl::PlanResult headline = pl::plan(p, 0.37);
    CHECK(headline.detector_pitch == 25e-6);
    CHECK_FALSE(headline.resolvable);
    CHECK(headline.margin ==
          doctest::Approx(1.7095669e-5 / 25e-6).epsilon(1e-6));

    const auto verdict = pl::resolvability(headline, 1e-5);
    CHECK(verdict.resolvable);
    CHECK(verdict.margin > 1.0);

    const auto exact_pitch = pl::resolvability(headline, headline.displacement);
    CHECK(exact_pitch.margin == 1.0);
    CHECK(exact_pitch.resolvable);

    CHECK_THROWS_AS(pl::resolvability(headline, 0.0),
                    weakspin::NonPositiveInputs);

    const pl::PlanResult slow = pl::plan(beam_at(900.0), 0.37);
    CHECK(slow.resolvable);
    CHECK(slow.margin > 1.0);
}

TEST_CASE("plan result is self-consistent") {
    const ExperimentParams p = headline_params();
    const double L = 0.37;
    const pl::PlanResult result = pl::plan(p, L);
    const double t = p.flight_time();
    CHECK(result.limit == L);
    CHECK(result.displacement ==
          doctest::Approx(constants().hbar * t * L / (p.sigma * p.mass))
              .epsilon(1e-12));
    CHECK(result.evolved_width ==
          doctest::Approx(wp::spread_at(wp::initial_packet(p.sigma), t, p.mass))
              .epsilon(1e-12));
    const auto bra = weakspin::spin::post_selector();
    const auto ket = weakspin::spin::make_spinor(p.theta, p.phi);
    CHECK(result.post_selection_probability ==
          doctest::Approx(std::norm(weakspin::spin::inner(bra, ket)))
              .epsilon(1e-12));
    CHECK(result.margin ==
          doctest::Approx(result.displacement / result.detector_pitch)
              .epsilon(1e-12));
    CHECK(result.resolvable == (result.margin >= 1.0));
}

TEST_CASE("tilt sweep at a held limit keeps the displacement constant") {
    const ExperimentParams p = headline_params();
    const std::vector<double> thetas{0.5, 1.0, 2.0, 2.9};
    const auto rows = pl::theta_sweep(p, thetas, true);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].theta == thetas[i]);
        CHECK(rows[i].limit == doctest::Approx(0.37).epsilon(1e-10));
        CHECK(rows[i].displacement ==
              doctest::Approx(rows[0].displacement).epsilon(1e-10));
        if (i > 0) CHECK(rows[i].gradient < rows[i - 1].gradient);
    }
}

TEST_CASE("tilt sweep at a fixed field follows the half-angle tangent") {
    const ExperimentParams p = headline_params();
    const std::vector<double> thetas{0.5, 1.0, 2.0, 2.9, 3.05};
    const auto rows = pl::theta_sweep(p, thetas, false);
    REQUIRE(rows.size() == 5);
    const double scale = rows[0].displacement / std::tan(thetas[0] / 2.0);
    for (const auto& row : rows) {
        CHECK(row.gradient == p.dBdz);
        CHECK(row.displacement / std::tan(row.theta / 2.0) ==
              doctest::Approx(scale).epsilon(1e-12));
    }
    CHECK(rows.front().inequalities_hold);
    CHECK_FALSE(rows.back().inequalities_hold);
}

TEST_CASE("probability falls while the fixed-field displacement grows") {
    const ExperimentParams p = headline_params();
    std::vector<double> thetas;
    for (int i = 0; i < 30; ++i) thetas.push_back(0.2 + i * (2.9 - 0.2) / 29.0);
    const auto rows = pl::theta_sweep(p, thetas, false);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].post_selection_probability <
              rows[i - 1].post_selection_probability);
        CHECK(rows[i].displacement > rows[i - 1].displacement);
    }
}

}  // TEST_SUITE
