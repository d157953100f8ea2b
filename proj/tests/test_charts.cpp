#include <cmath>
#include <numbers>

#include "calogero/charts.hpp"
#include "calogero/errors.hpp"
#include "calogero/hamiltonians.hpp"
#include "calogero/numerics.hpp"
#include "calogero/sampling.hpp"
#include "doctest.h"

using namespace calogero;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Chart coordinate functions as scalar fields on the reduced Cartesian chart
// (y..., py...), for the canonicity checks.
ScalarField polar_coord(int which) {
    return {[which](const Vec& z) {
                const PolarState p = polar_from_reduced({{z[0], z[1]}, {z[2], z[3]}});
                switch (which) {
                    case 0: return p.r;
                    case 1: return p.phi;
                    case 2: return p.p_r;
                    default: return p.p_phi;
                }
            },
            {}};
}

ScalarField spherical_coord(Chart chart, int which) {
    return {[chart, which](const Vec& z) {
                const SphericalState s =
                    spherical_from_reduced({{z[0], z[1], z[2]}, {z[3], z[4], z[5]}}, chart);
                switch (which) {
                    case 0: return s.r;
                    case 1: return s.theta;
                    case 2: return s.phi;
                    case 3: return s.p_r;
                    case 4: return s.p_theta;
                    default: return s.p_phi;
                }
            },
            {}};
}

}  // namespace

TEST_CASE("polar chart round trip and zero-momentum mapping") {
    for (int k = 0; k < 100; ++k) {
        const RootSystem rs = root_system(3);
        const ReducedPhaseState s = sample_reduced_state(rs, 13u, static_cast<std::uint64_t>(k));
        const PolarState p = polar_from_reduced(s);
        const ReducedPhaseState back = reduced_from_polar(p);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(back.y[i] == doctest::Approx(s.y[i]).epsilon(1e-12));
            CHECK(back.py[i] == doctest::Approx(s.py[i]).epsilon(1e-12));
        }
    }

    // Along the (2,3) root with zero momenta: chart angle 2pi/3 and zero
    // momenta in the chart.
    const RootSystem rs = root_system(3);
    const ReducedPhaseState s{rs.vector(2, 3), {0.0, 0.0}};
    const PolarState p = polar_from_reduced(s);
    CHECK(p.r == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.phi == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-12));
    CHECK(std::abs(p.p_r) < 1e-14);
    CHECK(std::abs(p.p_phi) < 1e-14);

    CHECK_THROWS_AS(polar_from_reduced({{0.0, 0.0}, {0.0, 0.0}}), InvalidInputError);
    CHECK_THROWS_AS(reduced_from_polar({-1.0, 0.0, 0.0, 0.0}), InvalidInputError);

    // Radial motion: momenta parallel to position.
    const ReducedPhaseState radial = reduced_from_polar({1.0, 0.0, 1.0, 0.0});
    const double cross = radial.y[0] * radial.py[1] - radial.y[1] * radial.py[0];
    CHECK(std::abs(cross) < 1e-14);
}

TEST_CASE("polar chart realizes the closed-form energy split") {
    const RootSystem rs = root_system(3);
    for (int k = 0; k < 100; ++k) {
        const ReducedPhaseState s = sample_reduced_state(rs, 17u, static_cast<std::uint64_t>(k));
        RandomStream rng(18u, static_cast<std::uint64_t>(k));
        const double g = rng.uniform_in(0.5, 2.0);
        const PolarState p = polar_from_reduced(s);
        const double split =
            0.5 * p.p_r * p.p_r + angular_closed_n3(p.phi, p.p_phi, g) / (p.r * p.r);
        CHECK(rel(energy_reduced(s, rs, g), split) < 1e-10);
    }
}

TEST_CASE("closed-form singular angles sit exactly on the root hyperplanes") {
    const RootSystem rs = root_system(3);
    for (int k = 0; k < 12; ++k) {
        const double phi_singular = kPi / 6.0 + k * kPi / 3.0;
        const ReducedPhaseState s = reduced_from_polar({1.0, phi_singular, 0.0, 0.0});
        double min_cos = 1.0;
        for (const auto& e : rs.entries)
            min_cos = std::min(min_cos, std::abs(dot(e.vector, s.y)));
        CHECK(min_cos < 1e-12);
    }
}

TEST_CASE("polar chart is canonical under the numerical bracket") {
    const RootSystem rs3 = root_system(3);
    BracketConfig cfg;
    cfg.fd_step = 1e-5;
    for (int k = 0; k < 10; ++k) {
        const ReducedPhaseState s = sample_reduced_state(rs3, 23u, static_cast<std::uint64_t>(k));
        const Vec z{s.y[0], s.y[1], s.py[0], s.py[1]};
        // {p, q} = +1 for conjugate pairs, zero otherwise.
        CHECK(std::abs(poisson_bracket(polar_coord(2), polar_coord(0), z, cfg) - 1.0) < 1e-6);
        CHECK(std::abs(poisson_bracket(polar_coord(3), polar_coord(1), z, cfg) - 1.0) < 1e-6);
        CHECK(std::abs(poisson_bracket(polar_coord(0), polar_coord(1), z, cfg)) < 1e-6);
        CHECK(std::abs(poisson_bracket(polar_coord(2), polar_coord(3), z, cfg)) < 1e-6);
        CHECK(std::abs(poisson_bracket(polar_coord(2), polar_coord(1), z, cfg)) < 1e-6);
        CHECK(std::abs(poisson_bracket(polar_coord(3), polar_coord(0), z, cfg)) < 1e-6);
    }
}

TEST_CASE("spherical charts: round trips, poles, chart change") {
    const RootSystem rs = root_system(4);
    for (Chart chart : {Chart::root13_aligned, Chart::square_frame}) {
        for (int k = 0; k < 100; ++k) {
            const ReducedPhaseState s =
                sample_reduced_state(rs, 29u, static_cast<std::uint64_t>(k));
            const SphericalState sp = spherical_from_reduced(s, chart);
            CHECK(sp.theta > 0.0);
            CHECK(sp.theta < kPi);
            const ReducedPhaseState back = reduced_from_spherical(sp);
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(back.y[i] == doctest::Approx(s.y[i]).epsilon(1e-12));
                CHECK(back.py[i] == doctest::Approx(s.py[i]).epsilon(1e-12));
            }
        }
    }

    // A state along the chart's third axis is a pole.
    const auto basis = chart_basis(Chart::square_frame);
    const ReducedPhaseState pole{{basis[2][0], basis[2][1], basis[2][2]}, {0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(spherical_from_reduced(pole, Chart::square_frame), ChartSingularityError);
    CHECK_THROWS_AS(spherical_from_reduced({{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}},
                                           Chart::root13_aligned),
                    InvalidInputError);

    // Chart change preserves radius and energy.
    for (int k = 0; k < 50; ++k) {
        const ReducedPhaseState s = sample_reduced_state(rs, 31u, static_cast<std::uint64_t>(k));
        const SphericalState a = spherical_from_reduced(s, Chart::root13_aligned);
        const SphericalState b =
            spherical_from_reduced(reduced_from_spherical(a), Chart::square_frame);
        CHECK(rel(a.r, b.r) < 1e-12);
        const double ea = energy_reduced(reduced_from_spherical(a), rs, 1.0);
        const double eb = energy_reduced(reduced_from_spherical(b), rs, 1.0);
        CHECK(rel(ea, eb) < 1e-10);
    }
}

TEST_CASE("spherical energy split against the six-center evaluation") {
    const RootSystem rs = root_system(4);
    for (Chart chart : {Chart::root13_aligned, Chart::square_frame}) {
        for (int k = 0; k < 100; ++k) {
            const ReducedPhaseState s =
                sample_reduced_state(rs, 37u, static_cast<std::uint64_t>(k));
            RandomStream rng(38u, static_cast<std::uint64_t>(k));
            const double g = rng.uniform_in(0.5, 2.0);
            const SphericalState sp = spherical_from_reduced(s, chart);
            const double closed =
                chart == Chart::root13_aligned
                    ? angular_n4_threefold_consolidated(sp.theta, sp.phi, sp.p_theta, sp.p_phi, g)
                    : angular_n4_fourfold_consolidated(sp.theta, sp.phi, sp.p_theta, sp.p_phi, g);
            const double split = 0.5 * sp.p_r * sp.p_r + closed / (sp.r * sp.r);
            CHECK(rel(energy_reduced(s, rs, g), split) < 1e-9);
        }
    }
}

TEST_CASE("spherical charts are canonical under the numerical bracket") {
    const RootSystem rs = root_system(4);
    BracketConfig cfg;
    cfg.fd_step = 1e-5;
    for (Chart chart : {Chart::root13_aligned, Chart::square_frame}) {
        for (int k = 0; k < 5; ++k) {
            const ReducedPhaseState s =
                sample_reduced_state(rs, 41u, static_cast<std::uint64_t>(k));
            const Vec z{s.y[0], s.y[1], s.y[2], s.py[0], s.py[1], s.py[2]};
            for (int pair = 0; pair < 3; ++pair)
                CHECK(std::abs(poisson_bracket(spherical_coord(chart, pair + 3),
                                               spherical_coord(chart, pair), z, cfg) -
                               1.0) < 1e-6);
            CHECK(std::abs(poisson_bracket(spherical_coord(chart, 1), spherical_coord(chart, 2),
                                           z, cfg)) < 1e-6);
            CHECK(std::abs(poisson_bracket(spherical_coord(chart, 4), spherical_coord(chart, 5),
                                           z, cfg)) < 1e-6);
            CHECK(std::abs(poisson_bracket(spherical_coord(chart, 3), spherical_coord(chart, 1),
                                           z, cfg)) < 1e-6);
        }
    }
}

TEST_CASE("reduced_from_spherical validates its input") {
    SphericalState s;
    s.r = 1.0;
    s.theta = -0.3;
    CHECK_THROWS_AS(reduced_from_spherical(s), InvalidInputError);
    s.theta = 1.0;
    s.r = 0.0;
    CHECK_THROWS_AS(reduced_from_spherical(s), InvalidInputError);
}
