#pragma once

#include <functional>

#include "calogero/linalg.hpp"

namespace calogero {

// A scalar observable on a canonical chart. Phase points are flat vectors
// (q_1..q_d, p_1..p_d). gradient may be empty; the bracket engine then falls
// back to central differences.
struct ScalarField {
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;
};

struct BracketConfig {
    enum class Mode { finite_difference, analytic_if_available };
    enum class Normalization { absolute, term_scaled };

    Mode mode = Mode::finite_difference;
    double fd_step = 1e-5;
    Normalization normalization = Normalization::absolute;
};

// Central-difference gradient (f(z+h e_k) - f(z-h e_k)) / 2h per coordinate.
Vec grad_fd(const std::function<double(const Vec&)>& f, const Vec& z, double h);

// Canonical bracket with the convention {p_i, q_j} = delta_ij of the model
// Hamiltonian: {f,g} = sum_k (df/dp_k dg/dq_k - df/dq_k dg/dp_k).
// term_scaled divides by the summed magnitude of the products, floored at 1.
double poisson_bracket(const ScalarField& f, const ScalarField& g, const Vec& z,
                       const BracketConfig& cfg = {});

}  // namespace calogero
