#include "calogero/integrals.hpp"

#include <cmath>

#include "calogero/errors.hpp"
#include "calogero/hamiltonians.hpp"

namespace calogero {

namespace {

// Shared kinematic quantities of the polar chart, z = (r, phi, p_r, p_phi).
struct PolarTerms {
    double r, phi, pr, pf;
    double v, vp;   // potential 9g/(1+cos 6 phi) and its phi-derivative
    double i;       // angular energy
    double s3, c3;  // sin/cos of 3 phi
    double u, w;    // p_r^2 - 6I/r^2 and 3 p_r^2 - 2I/r^2
};

PolarTerms polar_terms(double r, double phi, double pr, double pf, double g) {
    if (!(r > 0.0)) throw InvalidInputError("polar integrals: r must be positive");
    const double den = 1.0 + std::cos(6.0 * phi);
    if (den <= 1e-13) throw SingularConfigurationError("polar integrals: singular angle");
    PolarTerms t;
    t.r = r;
    t.phi = phi;
    t.pr = pr;
    t.pf = pf;
    t.v = 9.0 * g / den;
    t.vp = 54.0 * g * std::sin(6.0 * phi) / (den * den);
    t.i = 0.5 * pf * pf + t.v;
    t.s3 = std::sin(3.0 * phi);
    t.c3 = std::cos(3.0 * phi);
    const double r2 = r * r;
    t.u = pr * pr - 6.0 * t.i / r2;
    t.w = 3.0 * pr * pr - 2.0 * t.i / r2;
    return t;
}

PolarTerms polar_terms(const PolarState& s, double g) {
    return polar_terms(s.r, s.phi, s.p_r, s.p_phi, g);
}

double value_f(const PolarTerms& t) { return t.u * t.pr * t.s3 + t.w * t.pf * t.c3 / t.r; }

double value_k(const PolarTerms& t) {
    return t.u * t.pr * t.pf * t.c3 - 2.0 * t.i * t.w * t.s3 / t.r;
}

double value_h(const PolarTerms& t) { return 0.5 * t.pr * t.pr + t.i / (t.r * t.r); }

}  // namespace

double integral_F(const PolarState& state, double g) { return value_f(polar_terms(state, g)); }

double integral_K(const PolarState& state, double g) { return value_k(polar_terms(state, g)); }

ObservableSet evaluate_observables(const PolarState& state, double g) {
    const PolarTerms t = polar_terms(state, g);
    return {value_h(t), t.i, value_f(t), value_k(t)};
}

double check_ksq(const PolarState& state, double g) {
    const ObservableSet o = evaluate_observables(state, g);
    const double lhs = o.k_integral * o.k_integral + 2.0 * o.i_angular * o.f_integral * o.f_integral;
    const double h3 = o.h_reduced * o.h_reduced * o.h_reduced;
    const double rhs = 8.0 * h3 * (2.0 * o.i_angular - 9.0 * g);
    const double scale = std::max({o.k_integral * o.k_integral, std::abs(rhs), 1.0});
    return (lhs - rhs) / scale;
}

double solve_I(double h, double f, double k, double g) {
    const double h3 = h * h * h;
    const double den = 16.0 * h3 - 2.0 * f * f;
    if (std::abs(den) < 1e-10 * std::max(k * k, 1.0))
        throw DegenerateDenominatorError("solve_I: 16 h^3 - 2 f^2 too close to zero");
    return (k * k + 72.0 * g * h3) / den;
}

ScalarField polar_field_h(double g) {
    return {
        [g](const Vec& z) { return value_h(polar_terms(z[0], z[1], z[2], z[3], g)); },
        [g](const Vec& z) {
            const PolarTerms t = polar_terms(z[0], z[1], z[2], z[3], g);
            const double r2 = t.r * t.r;
            return Vec{-2.0 * t.i / (r2 * t.r), t.vp / r2, t.pr, t.pf / r2};
        },
    };
}

ScalarField polar_field_i(double g) {
    return {
        [g](const Vec& z) { return polar_terms(z[0], z[1], z[2], z[3], g).i; },
        [g](const Vec& z) {
            const PolarTerms t = polar_terms(z[0], z[1], z[2], z[3], g);
            return Vec{0.0, t.vp, 0.0, t.pf};
        },
    };
}

ScalarField polar_field_f(double g) {
    return {
        [g](const Vec& z) { return value_f(polar_terms(z[0], z[1], z[2], z[3], g)); },
        [g](const Vec& z) {
            const PolarTerms t = polar_terms(z[0], z[1], z[2], z[3], g);
            const double r = t.r, r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
            Vec grad(4);
            grad[0] = 12.0 * t.i * t.pr * t.s3 / r3 +
                      (4.0 * t.i / r4 - t.w / r2) * t.pf * t.c3;
            grad[1] = -6.0 * t.vp * t.pr * t.s3 / r2 + 3.0 * t.u * t.pr * t.c3 -
                      2.0 * t.vp * t.pf * t.c3 / r3 - 3.0 * t.w * t.pf * t.s3 / r;
            grad[2] = (3.0 * t.pr * t.pr - 6.0 * t.i / r2) * t.s3 +
                      6.0 * t.pr * t.pf * t.c3 / r;
            grad[3] = -6.0 * t.pr * t.pf * t.s3 / r2 +
                      (t.w - 2.0 * t.pf * t.pf / r2) * t.c3 / r;
            return grad;
        },
    };
}

ScalarField polar_field_k(double g) {
    return {
        [g](const Vec& z) { return value_k(polar_terms(z[0], z[1], z[2], z[3], g)); },
        [g](const Vec& z) {
            const PolarTerms t = polar_terms(z[0], z[1], z[2], z[3], g);
            const double r = t.r, r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
            Vec grad(4);
            grad[0] = 12.0 * t.i * t.pr * t.pf * t.c3 / r3 - 8.0 * t.i * t.i * t.s3 / r4 +
                      2.0 * t.i * t.w * t.s3 / r2;
            grad[1] = -6.0 * t.vp * t.pr * t.pf * t.c3 / r2 - 3.0 * t.u * t.pr * t.pf * t.s3 -
                      (2.0 / r) * (t.vp * t.w * t.s3 - 2.0 * t.vp * t.i * t.s3 / r2 +
                                   3.0 * t.i * t.w * t.c3);
            grad[2] = (3.0 * t.pr * t.pr - 6.0 * t.i / r2) * t.pf * t.c3 -
                      12.0 * t.i * t.pr * t.s3 / r;
            grad[3] = -6.0 * t.pr * t.pf * t.pf * t.c3 / r2 + t.u * t.pr * t.c3 -
                      (2.0 * t.s3 / r) * (t.pf * t.w - 2.0 * t.i * t.pf / r2);
            return grad;
        },
    };
}

BracketRelationsResiduals bracket_relations_report(const PolarState& state, double g,
                                                   const BracketConfig& cfg) {
    const Vec z{state.r, state.phi, state.p_r, state.p_phi};
    const ScalarField fi = polar_field_i(g);
    const ScalarField ff = polar_field_f(g);
    const ScalarField fk = polar_field_k(g);

    BracketConfig raw = cfg;
    raw.normalization = BracketConfig::Normalization::absolute;

    const ObservableSet o = evaluate_observables(state, g);
    const double b_if = poisson_bracket(fi, ff, z, raw);
    const double b_ik = poisson_bracket(fi, fk, z, raw);
    const double b_kf = poisson_bracket(fk, ff, z, raw);

    const double h3 = o.h_reduced * o.h_reduced * o.h_reduced;
    const double kf_expected = 3.0 * (8.0 * h3 - o.f_integral * o.f_integral);

    BracketRelationsResiduals res;
    res.r1 = (b_if - 3.0 * o.k_integral) /
             std::max({std::abs(b_if), 3.0 * std::abs(o.k_integral), 1.0});
    res.r2 = (b_ik + 6.0 * o.i_angular * o.f_integral) /
             std::max({std::abs(b_ik), 6.0 * std::abs(o.i_angular * o.f_integral), 1.0});
    res.r3 = (b_kf - kf_expected) / std::max({std::abs(b_kf), std::abs(kf_expected), 1.0});
    return res;
}

}  // namespace calogero
