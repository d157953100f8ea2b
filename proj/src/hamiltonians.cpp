#include "calogero/hamiltonians.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "calogero/errors.hpp"

namespace calogero {

namespace {

constexpr double kPi = std::numbers::pi;

// Guard for the closed-form denominators, relative to the term scale.
constexpr double kDenomGuard = 1e-13;

[[noreturn]] void throw_singular(int i, int j, const char* where) {
    throw SingularConfigurationError(std::string(where) + ": configuration on the (" +
                                         std::to_string(i) + "," + std::to_string(j) +
                                         ") collision hyperplane",
                                     {i, j});
}

}  // namespace

double energy_full(const PhaseState& state, const ModelParams& params) {
    params.validate();
    const auto n = static_cast<std::size_t>(params.n_particles);
    if (state.x.size() != n || state.p.size() != n)
        throw InvalidInputError("energy_full: state dimension does not match n_particles");

    double e = 0.0;
    for (double pi : state.p) e += 0.5 * pi * pi;
    if (params.coupling == 0.0) return e;

    const double guard = kSingularGuard * norm(state.x);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = state.x[i] - state.x[j];
            if (std::abs(d) <= guard)
                throw_singular(static_cast<int>(i) + 1, static_cast<int>(j) + 1, "energy_full");
            e += params.coupling / (d * d);
        }
    return e;
}

double energy_reduced(const ReducedPhaseState& state, const RootSystem& rs, double g) {
    const auto dim = static_cast<std::size_t>(rs.n_particles - 1);
    if (state.y.size() != dim || state.py.size() != dim)
        throw InvalidInputError("energy_reduced: state dimension does not match root system");

    double e = 0.0;
    for (double pi : state.py) e += 0.5 * pi * pi;
    if (g == 0.0) return e;

    const double guard = kSingularGuard * norm(state.y);
    for (const auto& entry : rs.entries) {
        const double q = dot(entry.vector, state.y);
        if (std::abs(q) <= guard) throw_singular(entry.i, entry.j, "energy_reduced");
        e += g / (2.0 * q * q);
    }
    return e;
}

double angular_energy_general(const Vec& n_hat, const Vec& tangent_p, const RootSystem& rs,
                              double g) {
    const auto dim = static_cast<std::size_t>(rs.n_particles - 1);
    if (n_hat.size() != dim || tangent_p.size() != dim)
        throw InvalidInputError("angular_energy_general: dimension does not match root system");
    if (std::abs(norm(n_hat) - 1.0) > 1e-10)
        throw InvalidInputError("angular_energy_general: n_hat is not a unit vector");
    if (std::abs(dot(n_hat, tangent_p)) > 1e-10 * std::max(1.0, norm(tangent_p)))
        throw InvalidInputError("angular_energy_general: tangent_p not orthogonal to n_hat");

    double e = 0.5 * dot(tangent_p, tangent_p);
    if (g == 0.0) return e;
    for (const auto& entry : rs.entries) {
        const double c = dot(entry.vector, n_hat);
        if (std::abs(c) <= kSingularGuard)
            throw_singular(entry.i, entry.j, "angular_energy_general");
        e += g / (2.0 * c * c);
    }
    return e;
}

double angular_potential_n3_centers(double phi, double g) {
    const double centers[3] = {0.0, kPi / 3.0, -kPi / 3.0};
    double v = 0.0;
    for (double c : centers) {
        const double cd = std::cos(phi - c);
        if (std::abs(cd) <= kSingularGuard)
            throw SingularConfigurationError("angular_potential_n3_centers: on a center plane");
        v += g / (2.0 * cd * cd);
    }
    return v;
}

double angular_closed_n3(double phi, double p_phi, double g) {
    const double den = 1.0 + std::cos(6.0 * phi);
    if (den <= kDenomGuard)
        throw SingularConfigurationError("angular_closed_n3: at a singular angle");
    const double value = 0.5 * p_phi * p_phi + 9.0 * g / den;
#ifndef NDEBUG
    const double check = 0.5 * p_phi * p_phi + angular_potential_n3_centers(phi, g);
    assert(std::abs(value - check) <= 1e-10 * std::max(1.0, std::abs(value)));
#endif
    return value;
}

double angular_closed_n4_threefold(double theta, double phi, double p_theta, double p_phi,
                                   double g) {
    const double s = std::sin(theta), c = std::cos(theta);
    if (std::abs(s) <= kSingularGuard)
        throw SingularConfigurationError("angular_closed_n4_threefold: theta at a pole");
    const double c3 = std::cos(3.0 * phi);
    const double hex = 1.0 + std::cos(6.0 * phi);
    if (hex <= kDenomGuard)
        throw SingularConfigurationError("angular_closed_n4_threefold: azimuthal denominator");

    double lobe; // the two D-denominator terms
    if (std::abs(c) >= std::abs(s)) {
        // |tan theta| <= 1: evaluate in t = tan(theta) directly.
        const double t = s / c, t2 = t * t, t3 = t2 * t;
        const double d = 3.0 * t2 - 8.0 + t3 * c3;
        if (std::abs(d) <= kDenomGuard * (3.0 * t2 + 8.0 + std::abs(t3)))
            throw SingularConfigurationError("angular_closed_n4_threefold: denominator zero");
        const double m = 8.0 - t2;
        lobe = 9.0 * g * m * m / (2.0 * d * d) + 12.0 * g / d;
    } else {
        // Near the equator rewrite in ct = cot(theta); algebraically identical.
        const double ct = c / s, ct2 = ct * ct, ct3 = ct2 * ct;
        const double d = c3 + 3.0 * ct - 8.0 * ct3;
        if (std::abs(d) <= kDenomGuard * (std::abs(c3) + 3.0 * std::abs(ct) + 8.0 * std::abs(ct3)))
            throw SingularConfigurationError("angular_closed_n4_threefold: denominator zero");
        const double m = 8.0 * ct2 - 1.0;
        lobe = 9.0 * g * ct2 * m * m / (2.0 * d * d) + 12.0 * g * ct3 / d;
    }

    return 0.5 * p_theta * p_theta + 0.5 * p_phi * p_phi / (s * s) + lobe +
           9.0 * g / (4.0 * s * s * hex);
}

double angular_closed_n4_fourfold(double theta, double phi, double p_theta, double p_phi,
                                  double g, KineticMode mode) {
    const double s = std::sin(theta), c = std::cos(theta);
    if (std::abs(s) <= kSingularGuard)
        throw SingularConfigurationError("angular_closed_n4_fourfold: theta at a pole");
    const double w = std::cos(4.0 * phi);
    const double den0 = 1.0 + w;
    if (den0 <= kDenomGuard)
        throw SingularConfigurationError("angular_closed_n4_fourfold: azimuthal denominator");

    double bracket; // the two k-dependent terms of the square bracket
    if (std::abs(c) >= std::abs(s)) {
        const double k = (s * s) / (c * c); // tan^2, small branch
        const double dz = k - 8.0 + 8.0 / k - k * w;
        if (std::abs(dz) <= kDenomGuard * (k + 8.0 + 8.0 / k))
            throw SingularConfigurationError("angular_closed_n4_fourfold: denominator zero");
        bracket = (k - 6.0) / dz + 4.0 * (k - 16.0 + 16.0 / k) / (dz * dz);
    } else {
        // ik = 1/k = cot^2(theta); same expression with numerator and
        // denominator divided by k, finite through theta = pi/2.
        const double ik = (c * c) / (s * s);
        const double e = 1.0 - 8.0 * ik + 8.0 * ik * ik - w;
        if (std::abs(e) <= kDenomGuard * (2.0 + 8.0 * ik + 8.0 * ik * ik))
            throw SingularConfigurationError("angular_closed_n4_fourfold: denominator zero");
        bracket = (1.0 - 6.0 * ik) / e + 4.0 * ik * (1.0 - 16.0 * ik + 16.0 * ik * ik) / (e * e);
    }

    const double kin_phi = (mode == KineticMode::full ? 1.0 : 0.5) * p_phi * p_phi / (s * s);
    return 0.5 * p_theta * p_theta + kin_phi + (4.0 * g / (s * s)) * (1.0 / den0 + bracket);
}

namespace {

// Center geometry of the root13-aligned chart: three centers on the equator
// at azimuths {0, +-pi/3}, three at polar angle acos(-sqrt(2/3)) and azimuths
// {pi/6, 5pi/6, 3pi/2}.
const double kTrioSin = 1.0 / std::sqrt(3.0);
const double kTrioCos = -std::sqrt(2.0 / 3.0);
const double kTrioAzimuth[3] = {kPi / 6.0, 5.0 * kPi / 6.0, 1.5 * kPi};

}  // namespace

double angular_n4_threefold_consolidated(double theta, double phi, double p_theta, double p_phi,
                                         double g) {
    const double s = std::sin(theta), c = std::cos(theta);
    if (std::abs(s) <= kSingularGuard)
        throw SingularConfigurationError("angular_n4_threefold_consolidated: theta at a pole");
    const double c3 = std::cos(3.0 * phi);
    if (std::abs(c3) <= kSingularGuard || std::abs(s) <= kSingularGuard)
        throw SingularConfigurationError("angular_n4_threefold_consolidated: equatorial plane");

    double v = 9.0 * g / (2.0 * s * s * c3 * c3);
    for (double psi : kTrioAzimuth) {
        const double q = s * kTrioSin * std::cos(phi - psi) + c * kTrioCos;
        if (std::abs(q) <= kSingularGuard)
            throw SingularConfigurationError("angular_n4_threefold_consolidated: center plane");
        v += g / (2.0 * q * q);
    }
    return 0.5 * p_theta * p_theta + 0.5 * p_phi * p_phi / (s * s) + v;
}

double angular_n4_fourfold_consolidated(double theta, double phi, double p_theta, double p_phi,
                                        double g) {
    const double s = std::sin(theta), c = std::cos(theta);
    if (std::abs(s) <= kSingularGuard)
        throw SingularConfigurationError("angular_n4_fourfold_consolidated: theta at a pole");
    const double c2 = std::cos(2.0 * phi);
    if (std::abs(c2) <= kSingularGuard)
        throw SingularConfigurationError("angular_n4_fourfold_consolidated: equatorial plane");

    double v = 2.0 * g / (s * s * c2 * c2);
    const double sp = s * std::sin(phi), cp = s * std::cos(phi);
    for (double q : {sp + c, sp - c, cp + c, cp - c}) {
        if (std::abs(q) <= kSingularGuard)
            throw SingularConfigurationError("angular_n4_fourfold_consolidated: center plane");
        v += g / (q * q);
    }
    return 0.5 * p_theta * p_theta + 0.5 * p_phi * p_phi / (s * s) + v;
}

double energy_d3(const Vec& u, const Vec& pu, double g) {
    if (u.size() != 3 || pu.size() != 3)
        throw InvalidInputError("energy_d3: expects three coordinate pairs");

    double e = 0.0;
    for (double pi : pu) e += 0.5 * pi * pi;
    if (g == 0.0) return e;

    const double guard = kSingularGuard * norm(u);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double d = u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(j)];
            const double sum = u[static_cast<std::size_t>(i)] + u[static_cast<std::size_t>(j)];
            if (std::abs(d) <= guard || std::abs(sum) <= guard)
                throw_singular(i + 1, j + 1, "energy_d3");
            e += g / (d * d) + g / (sum * sum);
        }
    return e;
}

HiggsSplit higgs_split(const Vec& n_hat, const RootSystem& rs, double g) {
    const auto dim = static_cast<std::size_t>(rs.n_particles - 1);
    if (n_hat.size() != dim) throw InvalidInputError("higgs_split: dimension mismatch");
    if (std::abs(norm(n_hat) - 1.0) > 1e-10)
        throw InvalidInputError("higgs_split: n_hat is not a unit vector");

    const double n = rs.n_particles;
    HiggsSplit out;
    out.constant = n * (n - 1.0) * g / 4.0;
    for (const auto& entry : rs.entries) {
        const double c = dot(entry.vector, n_hat);
        if (std::abs(c) <= kSingularGuard) throw_singular(entry.i, entry.j, "higgs_split");
        out.oscillator_sum += 0.5 * g * (1.0 - c * c) / (c * c);
    }
    return out;
}

Vec force_full(const PhaseState& state, const ModelParams& params) {
    params.validate();
    const auto n = static_cast<std::size_t>(params.n_particles);
    if (state.x.size() != n)
        throw InvalidInputError("force_full: state dimension does not match n_particles");

    Vec f(n, 0.0);
    if (params.coupling == 0.0) return f;
    const double guard = kSingularGuard * norm(state.x);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = state.x[i] - state.x[j];
            if (std::abs(d) <= guard)
                throw_singular(static_cast<int>(i) + 1, static_cast<int>(j) + 1, "force_full");
            const double t = 2.0 * params.coupling / (d * d * d);
            f[i] += t;
            f[j] -= t;
        }
    return f;
}

Vec force_reduced(const Vec& y, const RootSystem& rs, double g) {
    const auto dim = static_cast<std::size_t>(rs.n_particles - 1);
    if (y.size() != dim) throw InvalidInputError("force_reduced: dimension mismatch");

    Vec f(dim, 0.0);
    if (g == 0.0) return f;
    const double guard = kSingularGuard * norm(y);
    for (const auto& entry : rs.entries) {
        const double q = dot(entry.vector, y);
        if (std::abs(q) <= guard) throw_singular(entry.i, entry.j, "force_reduced");
        const double t = g / (q * q * q);
        for (std::size_t k = 0; k < dim; ++k) f[k] += t * entry.vector[k];
    }
    return f;
}

}  // namespace calogero
