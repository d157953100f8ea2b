#include <algorithm>
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

double angular_from_reduced(const ReducedPhaseState& s, const RootSystem& rs, double g) {
    const double r = norm(s.y);
    Vec n = s.y;
    for (auto& v : n) v /= r;
    const double pr = dot(n, s.py);
    Vec tangent(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) tangent[k] = r * (s.py[k] - pr * n[k]);
    return angular_energy_general(n, tangent, rs, g);
}

}  // namespace

TEST_CASE("full energy basics") {
    CHECK(energy_full({{0.0, 1.0}, {0.0, 0.0}}, {2, 1.0}) == doctest::Approx(1.0));

    const PhaseState s{{0.4, -1.2, 2.0}, {0.3, -0.1, 0.8}};
    CHECK(energy_full(s, {3, 0.0}) ==
          doctest::Approx(0.5 * (0.09 + 0.01 + 0.64)).epsilon(1e-14));

    // Permutation symmetry.
    const PhaseState t{{-1.2, 2.0, 0.4}, {-0.1, 0.8, 0.3}};
    CHECK(energy_full(s, {3, 1.3}) == doctest::Approx(energy_full(t, {3, 1.3})).epsilon(1e-14));

    try {
        energy_full({{1.0, 1.0, 0.0}, {0.0, 0.0, 0.0}}, {3, 1.0});
        FAIL("expected a singular configuration");
    } catch (const SingularConfigurationError& e) {
        CHECK(e.pair.first == 1);
        CHECK(e.pair.second == 2);
    }
}

TEST_CASE("reduced energy matches the one-pair case and additivity") {
    const RootSystem rs2 = root_system(2);
    CHECK(energy_reduced({{1.0}, {0.0}}, rs2, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(energy_reduced({{1.0}, {2.0}}, rs2, 0.0) == doctest::Approx(2.0).epsilon(1e-14));

    for (int n = 2; n <= 8; ++n) {
        const RootSystem rs = root_system(n);
        const ModelParams params{n, 0.9};
        for (int k = 0; k < 20; ++k) {
            const PhaseState state = sample_phase_state(n, 5u, static_cast<std::uint64_t>(k));
            const ComSplit split = com_split(state, params);
            const double full = energy_full(state, params);
            const double sum =
                0.5 * split.p_com * split.p_com + energy_reduced(split.reduced, rs, 0.9);
            CHECK(rel(full, sum) < 1e-12);
        }
    }
}

TEST_CASE("general angular energy") {
    const RootSystem rs = root_system(3);

    const Vec n_hat = rs.vector(2, 3);
    CHECK(angular_energy_general(n_hat, {0.0, 0.0}, rs, 1.0) ==
          doctest::Approx(4.5).epsilon(1e-13));

    // Kinetic-only evaluation with a unit tangent.
    CHECK(angular_energy_general({1.0, 0.0}, {0.0, 1.0}, rs, 0.0) ==
          doctest::Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(angular_energy_general({1.0, 1.0}, {0.0, 0.0}, rs, 1.0), InvalidInputError);
    CHECK_THROWS_AS(angular_energy_general({1.0, 0.0}, {1.0, 0.0}, rs, 1.0), InvalidInputError);

    // A direction orthogonal to b23 is a force-center plane.
    CHECK_THROWS_AS(angular_energy_general({1.0, 0.0}, {0.0, 0.0}, rs, 1.0),
                    SingularConfigurationError);
}

TEST_CASE("three-particle closed form") {
    CHECK(angular_closed_n3(0.0, 0.0, 1.0) == doctest::Approx(4.5).epsilon(1e-14));
    CHECK(angular_closed_n3(kPi / 12.0, 0.0, 1.0) == doctest::Approx(9.0).epsilon(1e-13));
    CHECK(angular_closed_n3(0.3, 1.7, 0.0) == doctest::Approx(0.5 * 1.7 * 1.7).epsilon(1e-14));
    CHECK_THROWS_AS(angular_closed_n3(kPi / 6.0, 0.0, 1.0), SingularConfigurationError);

    for (int k = 0; k < 200; ++k) {
        const PolarState ps = sample_polar_state(21u, static_cast<std::uint64_t>(k));
        const double closed = angular_closed_n3(ps.phi, ps.p_phi, 1.4);
        const double centers = 0.5 * ps.p_phi * ps.p_phi + angular_potential_n3_centers(ps.phi, 1.4);
        CHECK(rel(closed, centers) < 1e-10);
    }
}

TEST_CASE("four-particle closed forms: kinetic-only limits and symmetry") {
    const double th = 1.1, ph = 0.65, pt = 0.4, pf = -0.9;
    const double s2 = std::sin(th) * std::sin(th);

    CHECK(angular_closed_n4_threefold(th, ph, pt, pf, 0.0) ==
          doctest::Approx(0.5 * pt * pt + 0.5 * pf * pf / s2).epsilon(1e-13));
    CHECK(angular_closed_n4_fourfold(th, ph, pt, pf, 0.0, KineticMode::half) ==
          doctest::Approx(0.5 * pt * pt + 0.5 * pf * pf / s2).epsilon(1e-13));
    CHECK(angular_closed_n4_fourfold(th, ph, pt, pf, 0.0, KineticMode::full) ==
          doctest::Approx(0.5 * pt * pt + pf * pf / s2).epsilon(1e-13));

    // Threefold azimuthal symmetry of the closed-form candidate.
    for (int k = 0; k < 64; ++k) {
        RandomStream rng(31u, static_cast<std::uint64_t>(k));
        const double theta = rng.uniform_in(0.35, kPi - 0.35);
        const double phi = rng.uniform_in(0.0, 2.0 * kPi);
        double v0, v1;
        try {
            v0 = angular_closed_n4_threefold(theta, phi, 0.0, 0.0, 1.0);
            v1 = angular_closed_n4_threefold(theta, phi + 2.0 * kPi / 3.0, 0.0, 0.0, 1.0);
        } catch (const SingularConfigurationError&) {
            continue;
        }
        CHECK(rel(v0, v1) < 1e-10);
    }

    // Fourfold candidate: quarter-turn invariance.
    for (int k = 0; k < 64; ++k) {
        RandomStream rng(32u, static_cast<std::uint64_t>(k));
        const double theta = rng.uniform_in(0.35, kPi - 0.35);
        const double phi = rng.uniform_in(0.0, 2.0 * kPi);
        double v0, v1;
        try {
            v0 = angular_closed_n4_fourfold(theta, phi, 0.0, 0.0, 1.0, KineticMode::half);
            v1 = angular_closed_n4_fourfold(theta, phi + kPi / 2.0, 0.0, 0.0, 1.0,
                                            KineticMode::half);
        } catch (const SingularConfigurationError&) {
            continue;
        }
        CHECK(rel(v0, v1) < 1e-10);
    }

    // The tan/cot branches agree where they meet.
    const double v_lo = angular_closed_n4_threefold(kPi / 4.0 - 1e-9, 0.4, 0.0, 0.0, 1.0);
    const double v_hi = angular_closed_n4_threefold(kPi / 4.0 + 1e-9, 0.4, 0.0, 0.0, 1.0);
    CHECK(rel(v_lo, v_hi) < 1e-6);
}

TEST_CASE("consolidated six-center forms reproduce the general evaluation") {
    const RootSystem rs = root_system(4);
    for (int k = 0; k < 300; ++k) {
        const ReducedPhaseState s = sample_reduced_state(rs, 7u, static_cast<std::uint64_t>(k));
        RandomStream grng(77u, static_cast<std::uint64_t>(k));
        const double g = grng.uniform_in(0.5, 2.0);
        const double general = angular_from_reduced(s, rs, g);

        const SphericalState tri = spherical_from_reduced(s, Chart::root13_aligned);
        CHECK(rel(angular_n4_threefold_consolidated(tri.theta, tri.phi, tri.p_theta, tri.p_phi,
                                                    g),
                  general) < 1e-11);

        const SphericalState sq = spherical_from_reduced(s, Chart::square_frame);
        CHECK(rel(angular_n4_fourfold_consolidated(sq.theta, sq.phi, sq.p_theta, sq.p_phi, g),
                  general) < 1e-11);
    }
}

TEST_CASE("consolidated forms share the true reflection symmetries") {
    for (int k = 0; k < 48; ++k) {
        RandomStream rng(33u, static_cast<std::uint64_t>(k));
        const double theta = rng.uniform_in(0.4, kPi - 0.4);
        const double phi = rng.uniform_in(0.0, 2.0 * kPi);
        double v0;
        try {
            v0 = angular_n4_fourfold_consolidated(theta, phi, 0.0, 0.0, 1.0);
        } catch (const SingularConfigurationError&) {
            continue;
        }
        try {
            CHECK(rel(v0, angular_n4_fourfold_consolidated(kPi - theta, phi, 0.0, 0.0, 1.0)) <
                  1e-11);
            CHECK(rel(v0, angular_n4_fourfold_consolidated(theta, -phi, 0.0, 0.0, 1.0)) < 1e-11);
            CHECK(rel(v0, angular_n4_fourfold_consolidated(theta, phi + kPi / 2.0, 0.0, 0.0,
                                                           1.0)) < 1e-11);
        } catch (const SingularConfigurationError&) {
        }
    }
}

TEST_CASE("d3 energy") {
    CHECK(energy_d3({1.0, 2.0, 4.0}, {0.5, 0.0, 0.0}, 0.0) == doctest::Approx(0.125));

    const Vec u{0.7, -1.3, 2.1};
    const Vec pu{0.2, 0.9, -0.4};
    const double e = energy_d3(u, pu, 1.1);

    // Permutations and coordinate sign flips are symmetries.
    CHECK(energy_d3({-1.3, 2.1, 0.7}, {0.9, -0.4, 0.2}, 1.1) == doctest::Approx(e).epsilon(1e-13));
    CHECK(energy_d3({0.7, 1.3, 2.1}, {0.2, -0.9, -0.4}, 1.1) == doctest::Approx(e).epsilon(1e-13));

    CHECK_THROWS_AS(energy_d3({1.0, 1.0, 2.0}, {0.0, 0.0, 0.0}, 1.0),
                    SingularConfigurationError);
    CHECK_THROWS_AS(energy_d3({1.0, -1.0, 2.0}, {0.0, 0.0, 0.0}, 1.0),
                    SingularConfigurationError);
}

TEST_CASE("higgs decomposition") {
    const RootSystem rs3 = root_system(3);
    const RootSystem rs4 = root_system(4);
    const Vec dir{0.6, 0.8};
    CHECK(higgs_split(dir, rs3, 2.0).constant == doctest::Approx(3.0).epsilon(1e-14));
    Vec dir4{0.5, 0.5, std::sqrt(0.5)};
    CHECK(higgs_split(dir4, rs4, 2.0).constant == doctest::Approx(6.0).epsilon(1e-14));

    for (int n = 3; n <= 6; ++n) {
        const RootSystem rs = root_system(n);
        for (int k = 0; k < 50; ++k) {
            RandomStream rng(101u + static_cast<std::uint64_t>(n),
                             static_cast<std::uint64_t>(k));
            const Vec n_hat = sample_unit_direction(rs, rng);
            const double g = rng.uniform_in(0.5, 2.0);
            const Vec zero(n_hat.size(), 0.0);
            const HiggsSplit split = higgs_split(n_hat, rs, g);
            const double potential = angular_energy_general(n_hat, zero, rs, g);
            CHECK(rel(split.constant + split.oscillator_sum, potential) < 1e-12);
        }
    }
}

TEST_CASE("analytic forces agree with finite differences") {
    const RootSystem rs = root_system(4);
    const ModelParams params{4, 1.2};

    for (int k = 0; k < 20; ++k) {
        const ReducedPhaseState s = sample_reduced_state(rs, 3u, static_cast<std::uint64_t>(k));
        const Vec f = force_reduced(s.y, rs, params.coupling);
        const auto potential = [&](const Vec& y) {
            return energy_reduced({y, Vec(y.size(), 0.0)}, rs, params.coupling);
        };
        const Vec grad = grad_fd(potential, s.y, 1e-6);
        for (std::size_t i = 0; i < f.size(); ++i)
            CHECK(rel(f[i], -grad[i]) < 1e-6);

        const PhaseState full = sample_phase_state(4, 9u, static_cast<std::uint64_t>(k));
        const Vec ff = force_full(full, params);
        const auto vfull = [&](const Vec& x) {
            return energy_full({x, Vec(x.size(), 0.0)}, params);
        };
        const Vec gradf = grad_fd(vfull, full.x, 1e-6);
        for (std::size_t i = 0; i < ff.size(); ++i)
            CHECK(rel(ff[i], -gradf[i]) < 1e-6);
    }
}
