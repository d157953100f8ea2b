#pragma once

#include "calogero/charts.hpp"
#include "calogero/numerics.hpp"

namespace calogero {

// The four conserved quantities of the three-particle reduced system at one
// phase point. They satisfy K^2 + 2 I F^2 = 8 H^3 (2I - 9g).
struct ObservableSet {
    double h_reduced = 0.0;
    double i_angular = 0.0;
    double f_integral = 0.0;
    double k_integral = 0.0;
};

// Third-order constants of motion in the polar chart.
double integral_F(const PolarState& state, double g);
double integral_K(const PolarState& state, double g);

ObservableSet evaluate_observables(const PolarState& state, double g);

// Residual of the algebraic relation among (H, I, F, K), normalized by
// max(|K^2|, |8 H^3 (2I - 9g)|, 1).
double check_ksq(const PolarState& state, double g);

// I recovered from (H, F, K): (k^2 + 72 g h^3) / (16 h^3 - 2 f^2).
double solve_I(double h, double f, double k, double g);

// Polar-chart scalar fields on phase points (r, phi, p_r, p_phi), each with
// an analytic gradient for the bracket engine.
ScalarField polar_field_h(double g);
ScalarField polar_field_i(double g);
ScalarField polar_field_f(double g);
ScalarField polar_field_k(double g);

// Residuals of the bracket relations {I,F} = 3K, {I,K} = -6IF and
// {K,F} = 3(8H^3 - F^2), each normalized by the magnitude of its terms.
struct BracketRelationsResiduals {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
};

BracketRelationsResiduals bracket_relations_report(const PolarState& state, double g,
                                                   const BracketConfig& cfg);

}  // namespace calogero
