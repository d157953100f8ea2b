#pragma once

#include <array>

#include "calogero/geometry.hpp"
#include "calogero/model.hpp"

namespace calogero {

// Canonical polar chart of the three-particle reduced system. The chart is
// rotated so the three force centers sit at azimuths {0, pi/3, 2pi/3}, which
// is where the closed-form angular energy places them.
struct PolarState {
    double r = 0.0;
    double phi = 0.0;
    double p_r = 0.0;
    double p_phi = 0.0;
};

PolarState polar_from_reduced(const ReducedPhaseState& state);
ReducedPhaseState reduced_from_polar(const PolarState& state);

// Spherical charts of the four-particle reduced system.
//   root13_aligned: first axis along the (1,3) root, second in the span of
//     the (1,2) and (1,3) roots, third completing a right-handed frame (it is
//     normal to a triangular face of the cuboctahedron).
//   square_frame: axes along the square-face normals a_1, a_2, a_3.
enum class Chart { root13_aligned, square_frame };

struct SphericalState {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double p_r = 0.0;
    double p_theta = 0.0;
    double p_phi = 0.0;
    Chart chart = Chart::root13_aligned;
};

// Orthonormal chart basis, rows e_1, e_2, e_3 in reduced coordinates.
std::array<Vec3, 3> chart_basis(Chart chart);

SphericalState spherical_from_reduced(const ReducedPhaseState& state, Chart chart);
ReducedPhaseState reduced_from_spherical(const SphericalState& state);

}  // namespace calogero
