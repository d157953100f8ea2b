#include "calogero/charts.hpp"

#include <cmath>
#include <numbers>

#include "calogero/errors.hpp"

namespace calogero {

namespace {

constexpr double kPoleGuard = 1e-12;

// Fixed rotation taking the natural reduced frame (roots at -pi/6, pi/6,
// pi/2) to the chart frame (roots at 0, pi/3, 2pi/3).
const double kRotCos = std::cos(std::numbers::pi / 6.0);
const double kRotSin = std::sin(std::numbers::pi / 6.0);

}  // namespace

PolarState polar_from_reduced(const ReducedPhaseState& state) {
    if (state.y.size() != 2 || state.py.size() != 2)
        throw InvalidInputError("polar_from_reduced: expects the three-particle reduced state");
    const double y1 = kRotCos * state.y[0] - kRotSin * state.y[1];
    const double y2 = kRotSin * state.y[0] + kRotCos * state.y[1];
    const double p1 = kRotCos * state.py[0] - kRotSin * state.py[1];
    const double p2 = kRotSin * state.py[0] + kRotCos * state.py[1];

    const double r = std::hypot(y1, y2);
    if (r <= 0.0) throw InvalidInputError("polar_from_reduced: y = 0");

    PolarState out;
    out.r = r;
    out.phi = std::atan2(y2, y1);
    out.p_r = (y1 * p1 + y2 * p2) / r;
    out.p_phi = y1 * p2 - y2 * p1;
    return out;
}

ReducedPhaseState reduced_from_polar(const PolarState& state) {
    if (!(state.r > 0.0)) throw InvalidInputError("reduced_from_polar: r must be positive");
    const double cf = std::cos(state.phi), sf = std::sin(state.phi);
    const double y1 = state.r * cf, y2 = state.r * sf;
    const double p1 = state.p_r * cf - state.p_phi * sf / state.r;
    const double p2 = state.p_r * sf + state.p_phi * cf / state.r;

    // Undo the chart rotation.
    ReducedPhaseState out;
    out.y = {kRotCos * y1 + kRotSin * y2, -kRotSin * y1 + kRotCos * y2};
    out.py = {kRotCos * p1 + kRotSin * p2, -kRotSin * p1 + kRotCos * p2};
    return out;
}

std::array<Vec3, 3> chart_basis(Chart chart) {
    static const std::array<Vec3, 3> square = [] {
        return orthogonal_frame(root_system(4)).axes;
    }();
    static const std::array<Vec3, 3> root13 = [] {
        const RootSystem rs = root_system(4);
        const Vec3 b12 = to_vec3(rs.vector(1, 2));
        const Vec3 b13 = to_vec3(rs.vector(1, 3));
        const double proj = dot3(b12, b13);
        Vec3 e2{};
        for (std::size_t k = 0; k < 3; ++k) e2[k] = b12[k] - proj * b13[k];
        e2 = scale3(e2, 1.0 / norm3(e2));
        return std::array<Vec3, 3>{b13, e2, cross3(b13, e2)};
    }();
    return chart == Chart::square_frame ? square : root13;
}

SphericalState spherical_from_reduced(const ReducedPhaseState& state, Chart chart) {
    if (state.y.size() != 3 || state.py.size() != 3)
        throw InvalidInputError("spherical_from_reduced: expects the four-particle reduced state");
    const auto basis = chart_basis(chart);
    const Vec3 y = to_vec3(state.y);
    const Vec3 p = to_vec3(state.py);
    const Vec3 yc{dot3(basis[0], y), dot3(basis[1], y), dot3(basis[2], y)};
    const Vec3 pc{dot3(basis[0], p), dot3(basis[1], p), dot3(basis[2], p)};

    const double rho = std::hypot(yc[0], yc[1]);
    const double r = std::hypot(rho, yc[2]);
    if (r <= 0.0) throw InvalidInputError("spherical_from_reduced: y = 0");
    if (rho < kPoleGuard * r)
        throw ChartSingularityError("spherical_from_reduced: state at a chart pole");

    SphericalState out;
    out.chart = chart;
    out.r = r;
    out.theta = std::atan2(rho, yc[2]);
    out.phi = std::atan2(yc[1], yc[0]);

    const double st = rho / r, ct = yc[2] / r;
    const double cf = yc[0] / rho, sf = yc[1] / rho;
    out.p_r = st * cf * pc[0] + st * sf * pc[1] + ct * pc[2];
    out.p_theta = r * (ct * cf * pc[0] + ct * sf * pc[1] - st * pc[2]);
    out.p_phi = yc[0] * pc[1] - yc[1] * pc[0];
    return out;
}

ReducedPhaseState reduced_from_spherical(const SphericalState& state) {
    if (!(state.r > 0.0)) throw InvalidInputError("reduced_from_spherical: r must be positive");
    if (!(state.theta > 0.0 && state.theta < std::numbers::pi))
        throw InvalidInputError("reduced_from_spherical: theta outside (0, pi)");
    const double st = std::sin(state.theta), ct = std::cos(state.theta);
    if (st < kPoleGuard)
        throw ChartSingularityError("reduced_from_spherical: state at a chart pole");
    const double cf = std::cos(state.phi), sf = std::sin(state.phi);

    const Vec3 n{st * cf, st * sf, ct};
    const Vec3 etheta{ct * cf, ct * sf, -st};
    const Vec3 ephi{-sf, cf, 0.0};

    Vec3 yc = scale3(n, state.r);
    Vec3 pc{};
    for (std::size_t k = 0; k < 3; ++k)
        pc[k] = state.p_r * n[k] + (state.p_theta / state.r) * etheta[k] +
                (state.p_phi / (state.r * st)) * ephi[k];

    const auto basis = chart_basis(state.chart);
    ReducedPhaseState out;
    out.y.assign(3, 0.0);
    out.py.assign(3, 0.0);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i) {
            out.y[k] += basis[i][k] * yc[i];
            out.py[k] += basis[i][k] * pc[i];
        }
    return out;
}

}  // namespace calogero
