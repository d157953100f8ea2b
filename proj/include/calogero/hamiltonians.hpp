#pragma once

#include <utility>

#include "calogero/geometry.hpp"
#include "calogero/model.hpp"

namespace calogero {

// Relative guard below which a configuration counts as sitting on a collision
// hyperplane; evaluation throws instead of returning a huge number.
inline constexpr double kSingularGuard = 1e-12;

// Full N-particle energy: sum p^2/2 + sum_{i<j} g/(x_i-x_j)^2.
double energy_full(const PhaseState& state, const ModelParams& params);

// Center-of-mass-frame energy: sum py^2/2 + sum_a g/(2 (b^a.y)^2).
double energy_reduced(const ReducedPhaseState& state, const RootSystem& rs, double g);

// Angular energy I on the unit (N-2)-sphere: |tangent_p|^2/2 plus the
// multi-center potential sum_a g/(2 (n.b^a)^2). tangent_p must be orthogonal
// to n_hat; both tolerances are 1e-10.
double angular_energy_general(const Vec& n_hat, const Vec& tangent_p, const RootSystem& rs,
                              double g);

// Three-center angular potential of the three-particle system at chart angle
// phi (centers at 0 and +-pi/3).
double angular_potential_n3_centers(double phi, double g);

// Closed-form three-particle angular energy p_phi^2/2 + 9g/(1+cos 6 phi).
// Debug builds self-check against the three-center sum.
double angular_closed_n3(double phi, double p_phi, double g);

// Azimuthal kinetic term convention for the fourfold closed form: full means
// p_phi^2/sin^2(theta), half means the standard p_phi^2/(2 sin^2(theta)).
enum class KineticMode { full, half };

// Closed-form candidates for the four-particle angular energy, written in the
// chart whose polar axis is normal to a triangular face (threefold symmetric
// in the azimuth) and in the square-frame chart (fourfold symmetric). They
// evaluate a fixed reference coefficient set verbatim; the verify suites
// measure how well each candidate reproduces the six-center evaluation.
double angular_closed_n4_threefold(double theta, double phi, double p_theta, double p_phi,
                                   double g);
double angular_closed_n4_fourfold(double theta, double phi, double p_theta, double p_phi,
                                  double g, KineticMode mode);

// Six-center angular energy consolidated into closed expressions of the same
// chart angles (via the product identities for centers spaced 2pi/3 resp.
// pi/2); agrees with angular_energy_general to rounding.
double angular_n4_threefold_consolidated(double theta, double phi, double p_theta,
                                         double p_phi, double g);
double angular_n4_fourfold_consolidated(double theta, double phi, double p_theta,
                                        double p_phi, double g);

// Three-particle system with both difference and sum inverse-square pairs;
// equal to energy_reduced of the four-particle model after rotating into the
// square frame.
double energy_d3(const Vec& u, const Vec& pu, double g);

struct HiggsSplit {
    double constant = 0.0;       // N(N-1) g / 4
    double oscillator_sum = 0.0; // (g/2) sum_a tan^2(theta_a)
};

// Decomposition of the spherical multi-center potential into a constant plus
// spherical-oscillator wells, one per center.
HiggsSplit higgs_split(const Vec& n_hat, const RootSystem& rs, double g);

// Analytic forces (negative potential gradients) used by the integrators.
Vec force_full(const PhaseState& state, const ModelParams& params);
Vec force_reduced(const Vec& y, const RootSystem& rs, double g);

}  // namespace calogero
