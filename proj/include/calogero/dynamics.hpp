#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calogero/geometry.hpp"
#include "calogero/model.hpp"

namespace calogero {

enum class Integrator { leapfrog, rk4_reference };

struct TrajectorySample {
    double t = 0.0;
    ReducedPhaseState state;
    // (name, value) pairs in monitor order.
    std::vector<std::pair<std::string, double>> observables;
};

struct Trajectory {
    double dt = 0.0;
    long record_stride = 1;
    Integrator integrator = Integrator::leapfrog;
    std::vector<TrajectorySample> samples;
};

// Raised when a trajectory drifts inside the collision guard; carries the
// last completed step.
struct IntegrationAbortedError : std::runtime_error {
    double t_last = 0.0;
    ReducedPhaseState last_state;
    std::pair<int, int> pair{0, 0};

    IntegrationAbortedError(const std::string& what, double t, ReducedPhaseState state,
                            std::pair<int, int> offending)
        : std::runtime_error(what), t_last(t), last_state(std::move(state)), pair(offending) {}
};

// Fixed-step integration of the reduced system with observable monitoring.
// Supported monitor names: h_reduced, i_angular (any N), f_integral and
// k_integral (N = 3 only). Samples are recorded at step 0 and every
// record_stride steps. Aborts once any |y.b^a| falls below 1e-8.
Trajectory integrate(const ReducedPhaseState& state0, const ModelParams& params, double dt,
                     long steps, long record_stride, const std::vector<std::string>& monitors,
                     Integrator integrator = Integrator::leapfrog);

struct DriftStats {
    double max_abs_drift = 0.0;
    double max_rel_drift = 0.0;
};

// Drift of every monitored observable against its value at the first sample.
std::map<std::string, DriftStats> conservation_report(const Trajectory& traj);

}  // namespace calogero
