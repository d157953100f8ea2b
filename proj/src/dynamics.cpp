#include "calogero/dynamics.hpp"

#include <cmath>

#include "calogero/charts.hpp"
#include "calogero/errors.hpp"
#include "calogero/hamiltonians.hpp"
#include "calogero/integrals.hpp"

namespace calogero {

namespace {

constexpr double kCollisionGuard = 1e-8;

// Chart-free angular energy I = |r p_tan|^2/2 + V_sph(y/r); for N = 3 the
// polar closed form is used instead so monitored values and the closed form
// stay bit-comparable.
double monitor_i_angular(const ReducedPhaseState& s, const RootSystem& rs, double g) {
    if (rs.n_particles == 3) {
        const PolarState p = polar_from_reduced(s);
        return angular_closed_n3(p.phi, p.p_phi, g);
    }
    const double r = norm(s.y);
    if (r <= 0.0) throw InvalidInputError("i_angular: y = 0");
    Vec n = s.y;
    for (auto& v : n) v /= r;
    const double pr = dot(n, s.py);
    Vec tangent = s.py;
    for (std::size_t k = 0; k < n.size(); ++k) tangent[k] = r * (s.py[k] - pr * n[k]);
    return angular_energy_general(n, tangent, rs, g);
}

double monitor_value(const std::string& name, const ReducedPhaseState& s, const RootSystem& rs,
                     double g) {
    if (name == "h_reduced") return energy_reduced(s, rs, g);
    if (name == "i_angular") return monitor_i_angular(s, rs, g);
    if (name == "f_integral" || name == "k_integral") {
        if (rs.n_particles != 3)
            throw InvalidInputError("monitor " + name + " is defined for N = 3 only");
        const PolarState p = polar_from_reduced(s);
        return name == "f_integral" ? integral_F(p, g) : integral_K(p, g);
    }
    throw InvalidInputError("unknown monitor '" + name + "'");
}

void check_guard(const ReducedPhaseState& s, const RootSystem& rs, double t,
                 const ReducedPhaseState& last_good, double t_last) {
    for (const auto& e : rs.entries)
        if (std::abs(dot(e.vector, s.y)) < kCollisionGuard)
            throw IntegrationAbortedError(
                "integration aborted near the (" + std::to_string(e.i) + "," +
                    std::to_string(e.j) + ") collision at t = " + std::to_string(t),
                t_last, last_good, {e.i, e.j});
}

}  // namespace

Trajectory integrate(const ReducedPhaseState& state0, const ModelParams& params, double dt,
                     long steps, long record_stride, const std::vector<std::string>& monitors,
                     Integrator integrator) {
    params.validate();
    if (!(dt > 0.0)) throw InvalidParameterError("integrate: dt must be positive");
    if (steps < 1) throw InvalidParameterError("integrate: steps must be >= 1");
    if (record_stride < 1) throw InvalidParameterError("integrate: record_stride must be >= 1");
    const auto dim = static_cast<std::size_t>(params.n_particles - 1);
    if (state0.y.size() != dim || state0.py.size() != dim)
        throw InvalidInputError("integrate: state dimension does not match n_particles");

    const RootSystem rs = root_system(params.n_particles);
    const double g = params.coupling;

    Trajectory traj;
    traj.dt = dt;
    traj.record_stride = record_stride;
    traj.integrator = integrator;

    auto record = [&](double t, const ReducedPhaseState& s) {
        TrajectorySample sample;
        sample.t = t;
        sample.state = s;
        sample.observables.reserve(monitors.size());
        for (const auto& name : monitors)
            sample.observables.emplace_back(name, monitor_value(name, s, rs, g));
        traj.samples.push_back(std::move(sample));
    };

    ReducedPhaseState s = state0;
    ReducedPhaseState last_good = state0;
    double t_last = 0.0;

    check_guard(s, rs, 0.0, last_good, t_last);
    record(0.0, s);

    for (long step = 1; step <= steps; ++step) {
        const double t = static_cast<double>(step) * dt;
        if (integrator == Integrator::leapfrog) {
            // kick-drift-kick
            Vec f = force_reduced(s.y, rs, g);
            for (std::size_t k = 0; k < dim; ++k) s.py[k] += 0.5 * dt * f[k];
            for (std::size_t k = 0; k < dim; ++k) s.y[k] += dt * s.py[k];
            check_guard(s, rs, t, last_good, t_last);
            f = force_reduced(s.y, rs, g);
            for (std::size_t k = 0; k < dim; ++k) s.py[k] += 0.5 * dt * f[k];
        } else {
            // classical RK4 on (y, py); kept as a drift reference, not for
            // production runs.
            auto deriv = [&](const ReducedPhaseState& z) {
                std::pair<Vec, Vec> d{z.py, force_reduced(z.y, rs, g)};
                return d;
            };
            auto shifted = [&](const ReducedPhaseState& z, const std::pair<Vec, Vec>& d,
                               double h) {
                ReducedPhaseState out = z;
                for (std::size_t k = 0; k < dim; ++k) {
                    out.y[k] += h * d.first[k];
                    out.py[k] += h * d.second[k];
                }
                return out;
            };
            const auto k1 = deriv(s);
            const auto k2 = deriv(shifted(s, k1, 0.5 * dt));
            const auto k3 = deriv(shifted(s, k2, 0.5 * dt));
            const auto k4 = deriv(shifted(s, k3, dt));
            for (std::size_t k = 0; k < dim; ++k) {
                s.y[k] += dt / 6.0 * (k1.first[k] + 2.0 * k2.first[k] + 2.0 * k3.first[k] +
                                      k4.first[k]);
                s.py[k] += dt / 6.0 * (k1.second[k] + 2.0 * k2.second[k] + 2.0 * k3.second[k] +
                                       k4.second[k]);
            }
            check_guard(s, rs, t, last_good, t_last);
        }

        last_good = s;
        t_last = t;
        if (step % record_stride == 0) record(t, s);
    }
    return traj;
}

std::map<std::string, DriftStats> conservation_report(const Trajectory& traj) {
    if (traj.samples.size() < 2)
        throw InvalidInputError("conservation_report: need at least two samples");
    const auto& first = traj.samples.front().observables;
    if (first.empty())
        throw InvalidInputError("conservation_report: trajectory has no monitored observables");

    std::map<std::string, DriftStats> report;
    for (std::size_t k = 0; k < first.size(); ++k) {
        const std::string& name = first[k].first;
        const double ref = first[k].second;
        DriftStats stats;
        for (const auto& sample : traj.samples) {
            if (sample.observables.size() != first.size() ||
                sample.observables[k].first != name)
                throw InvalidInputError("conservation_report: inconsistent observables");
            const double drift = std::abs(sample.observables[k].second - ref);
            stats.max_abs_drift = std::max(stats.max_abs_drift, drift);
        }
        stats.max_rel_drift = stats.max_abs_drift / std::max(std::abs(ref), 1e-12);
        report[name] = stats;
    }
    return report;
}

}  // namespace calogero
