#pragma once

#include <cmath>

#include "calogero/errors.hpp"
#include "calogero/linalg.hpp"

namespace calogero {

// Particle count N and coupling g of the inverse-square pair potential.
// The angular problem it induces is a multi-center spherical oscillator of
// frequency omega = sqrt(g). coupling <= 0 is accepted for plain evaluation;
// conservation guarantees hold only in the repulsive regime g > 0.
struct ModelParams {
    int n_particles = 2;
    double coupling = 1.0;

    void validate() const {
        if (n_particles < 2) throw InvalidParameterError("ModelParams: n_particles must be >= 2");
        if (!std::isfinite(coupling)) throw InvalidParameterError("ModelParams: coupling must be finite");
    }

    double omega() const { return std::sqrt(coupling); }
};

// Lab-frame canonical coordinates, one position/momentum pair per particle.
struct PhaseState {
    Vec x;
    Vec p;
};

// Center-of-mass-frame canonical coordinates (dimension N-1).
struct ReducedPhaseState {
    Vec y;
    Vec py;
};

}  // namespace calogero
