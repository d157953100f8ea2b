#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "calogero/charts.hpp"
#include "calogero/geometry.hpp"

namespace calogero {

// Counter-based generator: stream (seed, index) is independent of every other
// index, so sweeps produce identical numbers under any loop schedule.
struct RandomStream {
    std::uint64_t s;

    RandomStream(std::uint64_t seed, std::uint64_t index)
        : s(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))) {
        next();
        next();
    }

    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        // Box-Muller; one value per call keeps streams stateless enough.
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
};

// Verification sampling rules: r uniform in [0.5, 2], angle uniform but kept
// 0.05 away from every collision hyperplane, momenta standard normal.
inline PolarState sample_polar_state(std::uint64_t seed, std::uint64_t index) {
    RandomStream rng(seed, index);
    PolarState s;
    s.r = rng.uniform_in(0.5, 2.0);
    const double pi = std::numbers::pi;
    for (;;) {
        const double phi = rng.uniform_in(0.0, 2.0 * pi);
        // Singular angles sit at pi/6 + k pi/3.
        double x = std::fmod(phi - pi / 6.0, pi / 3.0);
        if (x < 0.0) x += pi / 3.0;
        if (std::min(x, pi / 3.0 - x) >= 0.05) {
            s.phi = phi;
            break;
        }
    }
    s.p_r = rng.normal();
    s.p_phi = rng.normal();
    return s;
}

// Unit direction with every |n.b^a| at least 0.05.
inline Vec sample_unit_direction(const RootSystem& rs, RandomStream& rng) {
    const std::size_t dim = static_cast<std::size_t>(rs.n_particles - 1);
    for (;;) {
        Vec n(dim);
        for (auto& v : n) v = rng.normal();
        const double len = norm(n);
        if (len < 1e-8) continue;
        for (auto& v : n) v /= len;
        double min_cos = 1.0;
        for (const auto& e : rs.entries) min_cos = std::min(min_cos, std::abs(dot(e.vector, n)));
        if (min_cos >= 0.05) return n;
    }
}

inline ReducedPhaseState sample_reduced_state(const RootSystem& rs, std::uint64_t seed,
                                              std::uint64_t index) {
    RandomStream rng(seed, index);
    const Vec n = sample_unit_direction(rs, rng);
    const double r = rng.uniform_in(0.5, 2.0);
    ReducedPhaseState s;
    s.y.resize(n.size());
    s.py.resize(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) {
        s.y[k] = r * n[k];
        s.py[k] = rng.normal();
    }
    return s;
}

inline PhaseState sample_phase_state(int n, std::uint64_t seed, std::uint64_t index) {
    RandomStream rng(seed, index);
    PhaseState s;
    s.x.resize(static_cast<std::size_t>(n));
    s.p.resize(static_cast<std::size_t>(n));
    for (;;) {
        for (auto& v : s.x) v = rng.uniform_in(-2.0, 2.0);
        double min_sep = 1e30;
        for (std::size_t i = 0; i < s.x.size(); ++i)
            for (std::size_t j = i + 1; j < s.x.size(); ++j)
                min_sep = std::min(min_sep, std::abs(s.x[i] - s.x[j]));
        if (min_sep >= 0.05) break;
    }
    for (auto& v : s.p) v = rng.normal();
    return s;
}

}  // namespace calogero
