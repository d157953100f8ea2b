#include "calogero/numerics.hpp"

#include <cmath>

#include "calogero/errors.hpp"

namespace calogero {

Vec grad_fd(const std::function<double(const Vec&)>& f, const Vec& z, double h) {
    if (!(h > 0.0)) throw InvalidParameterError("grad_fd: step must be positive");
    Vec g(z.size(), 0.0);
    Vec probe = z;
    for (std::size_t k = 0; k < z.size(); ++k) {
        probe[k] = z[k] + h;
        const double fp = f(probe);
        probe[k] = z[k] - h;
        const double fm = f(probe);
        probe[k] = z[k];
        g[k] = (fp - fm) / (2.0 * h);
    }
    return g;
}

double poisson_bracket(const ScalarField& f, const ScalarField& g, const Vec& z,
                       const BracketConfig& cfg) {
    if (z.size() % 2 != 0)
        throw InvalidInputError("poisson_bracket: phase point must have even dimension");
    const std::size_t d = z.size() / 2;

    const bool analytic = cfg.mode == BracketConfig::Mode::analytic_if_available &&
                          f.gradient && g.gradient;
    const Vec gf = analytic ? f.gradient(z) : grad_fd(f.value, z, cfg.fd_step);
    const Vec gg = analytic ? g.gradient(z) : grad_fd(g.value, z, cfg.fd_step);

    double bracket = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double a = gf[d + k] * gg[k]; // df/dp_k dg/dq_k
        const double b = gf[k] * gg[d + k]; // df/dq_k dg/dp_k
        bracket += a - b;
        scale += std::abs(a) + std::abs(b);
    }
    if (cfg.normalization == BracketConfig::Normalization::term_scaled)
        return bracket / std::max(1.0, scale);
    return bracket;
}

}  // namespace calogero
