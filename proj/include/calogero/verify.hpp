#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace calogero::verify {

using json = nlohmann::ordered_json;

// Every sweep exists in a serial and an OpenMP flavor (parallel flag); both
// produce identical numbers because each sample draws from its own counter
// seeded stream and the reductions are plain maxima.

struct RootsReport {
    int n = 0;
    double max_unit_residual = 0.0;
    double max_cosine_residual = 0.0;
    double max_jacobi_residual = 0.0;

    double max_residual() const;
    json to_json() const;
};

RootsReport verify_roots(int n);

struct CuboctahedronReport {
    double max_component_residual = 0.0;     // six pair directions vs reference
    std::size_t edge_count = 0;
    std::size_t triangle_count = 0;
    std::size_t square_count = 0;
    double max_square_normal_residual = 0.0; // square faces vs frame axes
    bool counts_ok = false;

    double max_residual() const;
    json to_json() const;
};

CuboctahedronReport verify_cuboctahedron();

struct IdentitiesN3Report {
    int samples = 0;
    std::uint64_t seed = 0;
    double closed_forms = 0.0;       // three-center sum vs closed fraction
    double closed_vs_general = 0.0;  // closed form vs multi-center evaluation
    double energy_split = 0.0;       // reduced energy vs p_r^2/2 + I/r^2

    double max_residual() const;
    json to_json() const;
};

IdentitiesN3Report verify_identities_n3(int samples, std::uint64_t seed, bool parallel = true);

// Best rigid chart relabeling (azimuth offset, azimuth reflection, polar
// flip) found for a closed-form candidate against the six-center potential.
struct ChartFitSearch {
    double azimuth_offset = 0.0;
    bool phi_reflected = false;
    bool theta_flipped = false;
    double residual = 0.0;
};

struct AngularN4Report {
    int samples = 0;
    std::uint64_t seed = 0;
    double threefold_closed_vs_general = 0.0;
    double fourfold_closed_full_vs_general = 0.0;
    double fourfold_closed_half_vs_general = 0.0;
    double threefold_consolidated_vs_general = 0.0;
    double fourfold_consolidated_vs_general = 0.0;
    double d3_vs_reduced = 0.0;
    // Kinetic-mode decision made with the consolidated potential, so a
    // potential-coefficient mismatch cannot mask it.
    double kinetic_full_residual = 0.0;
    double kinetic_half_residual = 0.0;
    std::string kinetic_mode_matched = "none";
    ChartFitSearch threefold_fit;
    ChartFitSearch fourfold_fit;

    double max_residual() const;
    json to_json() const;
};

AngularN4Report verify_angular_n4(int samples, std::uint64_t seed, double mode_tol = 1e-9,
                                  bool parallel = true);

struct BracketsReport {
    int samples = 0;
    std::uint64_t seed = 0;
    bool analytic = false;
    double r1 = 0.0, r2 = 0.0, r3 = 0.0; // relation residuals
    double h_i = 0.0, h_f = 0.0, h_k = 0.0; // conservation brackets
    double r3_alternate = 0.0; // the two equivalent forms of {K,F}

    double max_residual() const;
    json to_json() const;
};

BracketsReport verify_brackets(int samples, std::uint64_t seed, bool analytic,
                               bool parallel = true);

struct KsqReport {
    int samples = 0;
    std::uint64_t seed = 0;
    double max_sweep_residual = 0.0;
    double worked_point_residual = 0.0;

    double max_residual() const;
    json to_json() const;
};

KsqReport verify_ksq(int samples, std::uint64_t seed, bool parallel = true);

struct HiggsReport {
    int samples = 0;
    std::uint64_t seed = 0;
    int n_min = 3, n_max = 6;
    double max_decomposition_residual = 0.0;

    double max_residual() const;
    json to_json() const;
};

HiggsReport verify_higgs(int samples, std::uint64_t seed, int n_min = 3, int n_max = 6,
                         bool parallel = true);

struct EnergySplitReport {
    int samples = 0;
    std::uint64_t seed = 0;
    int n_min = 2, n_max = 8;
    double max_additivity_residual = 0.0; // energy_full vs p0^2/2 + reduced

    double max_residual() const;
    json to_json() const;
};

EnergySplitReport verify_energy_split(int samples, std::uint64_t seed, int n_min = 2,
                                      int n_max = 8, bool parallel = true);

}  // namespace calogero::verify
