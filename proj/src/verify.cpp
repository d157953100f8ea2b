#include "calogero/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "calogero/charts.hpp"
#include "calogero/errors.hpp"
#include "calogero/geometry.hpp"
#include "calogero/hamiltonians.hpp"
#include "calogero/integrals.hpp"
#include "calogero/numerics.hpp"
#include "calogero/sampling.hpp"

namespace calogero::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

// Max-reduction sweep over independent samples; the OpenMP and serial paths
// are bit-identical because sample i only reads stream (seed, i) and max is
// exact.
template <std::size_t K, typename Fn>
std::array<double, K> max_sweep(int samples, bool parallel, Fn fn) {
    std::array<double, K> out;
    out.fill(0.0);
    auto guarded = [&fn](int i) -> std::array<double, K> {
        try {
            return fn(i);
        } catch (const std::exception&) {
            std::array<double, K> bad;
            bad.fill(kInf);
            return bad;
        }
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::array<double, K> local;
            local.fill(0.0);
#pragma omp for schedule(static) nowait
            for (int i = 0; i < samples; ++i) {
                const auto r = guarded(i);
                for (std::size_t k = 0; k < K; ++k) local[k] = std::max(local[k], r[k]);
            }
#pragma omp critical
            for (std::size_t k = 0; k < K; ++k) out[k] = std::max(out[k], local[k]);
        }
        return out;
#endif
    }
    for (int i = 0; i < samples; ++i) {
        const auto r = guarded(i);
        for (std::size_t k = 0; k < K; ++k) out[k] = std::max(out[k], r[k]);
    }
    return out;
}

double sample_coupling(std::uint64_t seed, std::uint64_t index) {
    RandomStream rng(seed ^ 0x5BD1E995C3B9ULL, index);
    return rng.uniform_in(0.5, 2.0);
}

// The six pair directions of the four-particle system; fixed geometry the
// construction must reproduce, in pair order (12)(13)(14)(23)(24)(34).
const std::array<Vec3, 6>& reference_n4_directions() {
    static const std::array<Vec3, 6> ref = [] {
        const double sq23 = std::sqrt(2.0 / 3.0);
        const double is3 = 1.0 / std::sqrt(3.0);
        const double hs3 = 0.5 * is3;
        const double h3 = 0.5 * std::sqrt(3.0);
        return std::array<Vec3, 6>{Vec3{sq23, -is3, 0.0}, Vec3{sq23, hs3, -0.5},
                                   Vec3{sq23, hs3, 0.5},  Vec3{0.0, h3, -0.5},
                                   Vec3{0.0, h3, 0.5},   Vec3{0.0, 0.0, 1.0}};
    }();
    return ref;
}

// Angular energy straight from a reduced state, no chart involved.
double angular_from_reduced(const ReducedPhaseState& s, const RootSystem& rs, double g) {
    const double r = norm(s.y);
    Vec n = s.y;
    for (auto& v : n) v /= r;
    const double pr = dot(n, s.py);
    Vec tangent(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) tangent[k] = r * (s.py[k] - pr * n[k]);
    return angular_energy_general(n, tangent, rs, g);
}

}  // namespace

double RootsReport::max_residual() const {
    return std::max({max_unit_residual, max_cosine_residual, max_jacobi_residual});
}

json RootsReport::to_json() const {
    json j;
    j["suite"] = "roots";
    j["n"] = n;
    j["residuals"]["unit_norm"] = max_unit_residual;
    j["residuals"]["pairwise_cosine"] = max_cosine_residual;
    j["residuals"]["jacobi_orthogonality"] = max_jacobi_residual;
    j["max_residual"] = max_residual();
    return j;
}

RootsReport verify_roots(int n) {
    RootsReport rep;
    rep.n = n;

    const Mat a = jacobi_matrix(n);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < a.rows; ++k) s += a(k, i) * a(k, j);
            rep.max_jacobi_residual =
                std::max(rep.max_jacobi_residual, std::abs(s - (i == j ? 1.0 : 0.0)));
        }

    const RootSystem rs = root_system(n);
    for (const auto& e : rs.entries)
        rep.max_unit_residual =
            std::max(rep.max_unit_residual, std::abs(norm(e.vector) - 1.0));
    for (const auto& ea : rs.entries)
        for (const auto& eb : rs.entries) {
            const double expected = 0.5 * ((ea.i == eb.i ? 1.0 : 0.0) + (ea.j == eb.j ? 1.0 : 0.0) -
                                           (ea.i == eb.j ? 1.0 : 0.0) - (eb.i == ea.j ? 1.0 : 0.0));
            rep.max_cosine_residual = std::max(
                rep.max_cosine_residual, std::abs(dot(ea.vector, eb.vector) - expected));
        }
    return rep;
}

double CuboctahedronReport::max_residual() const {
    if (!counts_ok) return kInf;
    return std::max(max_component_residual, max_square_normal_residual);
}

json CuboctahedronReport::to_json() const {
    json j;
    j["suite"] = "cuboctahedron";
    j["max_component_residual"] = max_component_residual;
    j["edge_count"] = edge_count;
    j["triangle_count"] = triangle_count;
    j["square_count"] = square_count;
    j["max_square_normal_residual"] = max_square_normal_residual;
    j["counts_ok"] = counts_ok;
    j["max_residual"] = max_residual();
    return j;
}

CuboctahedronReport verify_cuboctahedron() {
    CuboctahedronReport rep;
    const RootSystem rs = root_system(4);
    const auto& ref = reference_n4_directions();
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t k = 0; k < 3; ++k)
            rep.max_component_residual = std::max(
                rep.max_component_residual, std::abs(rs.entries[a].vector[k] - ref[a][k]));

    const Cuboctahedron solid = build_cuboctahedron();
    rep.edge_count = solid.edges.size();
    rep.triangle_count = solid.triangles.size();
    rep.square_count = solid.squares.size();
    rep.counts_ok = solid.vertices.size() == 12 && rep.edge_count == 24 &&
                    rep.triangle_count == 8 && rep.square_count == 6;

    for (const auto& sq : solid.squares) {
        Vec3 centroid{0.0, 0.0, 0.0};
        for (int idx : sq)
            for (std::size_t k = 0; k < 3; ++k)
                centroid[k] += solid.vertices[static_cast<std::size_t>(idx)].coords[k];
        const double len = norm3(centroid);
        double best = kInf;
        for (const auto& axis : solid.frame.axes)
            best = std::min(best, std::abs(1.0 - std::abs(dot3(centroid, axis)) / len));
        rep.max_square_normal_residual = std::max(rep.max_square_normal_residual, best);
    }
    return rep;
}

double IdentitiesN3Report::max_residual() const {
    return std::max({closed_forms, closed_vs_general, energy_split});
}

json IdentitiesN3Report::to_json() const {
    json j;
    j["suite"] = "identities_n3";
    j["samples"] = samples;
    j["seed"] = seed;
    j["residuals"]["three_center_vs_closed"] = closed_forms;
    j["residuals"]["closed_vs_general"] = closed_vs_general;
    j["residuals"]["energy_split"] = energy_split;
    j["max_residual"] = max_residual();
    return j;
}

IdentitiesN3Report verify_identities_n3(int samples, std::uint64_t seed, bool parallel) {
    IdentitiesN3Report rep;
    rep.samples = samples;
    rep.seed = seed;

    const RootSystem rs = root_system(3);
    const auto res = max_sweep<3>(samples, parallel, [&](int i) {
        const PolarState ps = sample_polar_state(seed, static_cast<std::uint64_t>(i));
        const double g = sample_coupling(seed, static_cast<std::uint64_t>(i));

        const double closed = angular_closed_n3(ps.phi, ps.p_phi, g);
        const double centers = 0.5 * ps.p_phi * ps.p_phi + angular_potential_n3_centers(ps.phi, g);

        const ReducedPhaseState red = reduced_from_polar(ps);
        const double general = angular_from_reduced(red, rs, g);
        const double split = 0.5 * ps.p_r * ps.p_r + closed / (ps.r * ps.r);

        return std::array<double, 3>{rel(closed, centers), rel(closed, general),
                                     rel(energy_reduced(red, rs, g), split)};
    });
    rep.closed_forms = res[0];
    rep.closed_vs_general = res[1];
    rep.energy_split = res[2];
    return rep;
}

double AngularN4Report::max_residual() const {
    return std::max({threefold_closed_vs_general, fourfold_closed_full_vs_general,
                     fourfold_closed_half_vs_general, threefold_consolidated_vs_general,
                     fourfold_consolidated_vs_general, d3_vs_reduced});
}

json AngularN4Report::to_json() const {
    json j;
    j["suite"] = "angular_n4";
    j["samples"] = samples;
    j["seed"] = seed;
    j["residuals"]["threefold_closed_vs_general"] = threefold_closed_vs_general;
    j["residuals"]["fourfold_closed_full_vs_general"] = fourfold_closed_full_vs_general;
    j["residuals"]["fourfold_closed_half_vs_general"] = fourfold_closed_half_vs_general;
    j["residuals"]["threefold_consolidated_vs_general"] = threefold_consolidated_vs_general;
    j["residuals"]["fourfold_consolidated_vs_general"] = fourfold_consolidated_vs_general;
    j["residuals"]["d3_vs_reduced"] = d3_vs_reduced;
    j["kinetic_mode"]["full_residual"] = kinetic_full_residual;
    j["kinetic_mode"]["half_residual"] = kinetic_half_residual;
    j["kinetic_mode"]["matched"] = kinetic_mode_matched;
    auto fit = [](const ChartFitSearch& f) {
        json v;
        v["azimuth_offset"] = f.azimuth_offset;
        v["phi_reflected"] = f.phi_reflected;
        v["theta_flipped"] = f.theta_flipped;
        v["residual"] = f.residual;
        return v;
    };
    j["closed_form_fit_search"]["threefold"] = fit(threefold_fit);
    j["closed_form_fit_search"]["fourfold"] = fit(fourfold_fit);
    j["max_residual"] = max_residual();
    return j;
}

namespace {

// Exhaustive rigid-relabeling search: how close can a closed-form candidate
// come to the six-center potential under any azimuth offset, azimuth
// reflection, and polar flip. Potentials only (zero momenta).
template <typename Candidate>
ChartFitSearch chart_fit_search(Candidate candidate, Chart chart, std::uint64_t seed) {
    constexpr int kDirections = 48;
    constexpr int kOffsets = 192;
    const RootSystem rs = root_system(4);

    std::vector<double> theta(kDirections), phi(kDirections), target(kDirections);
    for (int i = 0; i < kDirections; ++i) {
        ReducedPhaseState s =
            sample_reduced_state(rs, seed ^ 0xF17A9ULL, static_cast<std::uint64_t>(i));
        std::fill(s.py.begin(), s.py.end(), 0.0);
        const SphericalState sp = spherical_from_reduced(s, chart);
        theta[static_cast<std::size_t>(i)] = sp.theta;
        phi[static_cast<std::size_t>(i)] = sp.phi;
        target[static_cast<std::size_t>(i)] = angular_from_reduced(s, rs, 1.0);
    }

    ChartFitSearch best;
    best.residual = kInf;
    for (int reflected = 0; reflected < 2; ++reflected)
        for (int flipped = 0; flipped < 2; ++flipped)
            for (int k = 0; k < kOffsets; ++k) {
                const double offset = 2.0 * kPi * k / kOffsets;
                double worst = 0.0;
                for (int i = 0; i < kDirections; ++i) {
                    const auto ii = static_cast<std::size_t>(i);
                    const double th = flipped ? kPi - theta[ii] : theta[ii];
                    const double ph = (reflected ? -phi[ii] : phi[ii]) + offset;
                    double value;
                    try {
                        value = candidate(th, ph);
                    } catch (const std::exception&) {
                        value = kInf;
                    }
                    worst = std::max(worst, rel(value, target[ii]));
                    if (worst >= best.residual) break;
                }
                if (worst < best.residual)
                    best = {offset, reflected != 0, flipped != 0, worst};
            }
    return best;
}

}  // namespace

AngularN4Report verify_angular_n4(int samples, std::uint64_t seed, double mode_tol,
                                  bool parallel) {
    AngularN4Report rep;
    rep.samples = samples;
    rep.seed = seed;

    const RootSystem rs = root_system(4);
    const Frame3 frame = orthogonal_frame(rs);

    const auto res = max_sweep<8>(samples, parallel, [&](int i) {
        const ReducedPhaseState s = sample_reduced_state(rs, seed, static_cast<std::uint64_t>(i));
        const double g = sample_coupling(seed, static_cast<std::uint64_t>(i));
        const double general = angular_from_reduced(s, rs, g);

        const SphericalState tri = spherical_from_reduced(s, Chart::root13_aligned);
        const double tri_closed =
            angular_closed_n4_threefold(tri.theta, tri.phi, tri.p_theta, tri.p_phi, g);
        const double tri_consolidated =
            angular_n4_threefold_consolidated(tri.theta, tri.phi, tri.p_theta, tri.p_phi, g);

        const SphericalState sq = spherical_from_reduced(s, Chart::square_frame);
        const double sq_full = angular_closed_n4_fourfold(sq.theta, sq.phi, sq.p_theta, sq.p_phi,
                                                          g, KineticMode::full);
        const double sq_half = angular_closed_n4_fourfold(sq.theta, sq.phi, sq.p_theta, sq.p_phi,
                                                          g, KineticMode::half);
        const double sq_consolidated =
            angular_n4_fourfold_consolidated(sq.theta, sq.phi, sq.p_theta, sq.p_phi, g);
        const double sin2 = std::sin(sq.theta) * std::sin(sq.theta);
        const double sq_consolidated_full =
            sq_consolidated + 0.5 * sq.p_phi * sq.p_phi / sin2;

        // D3 equivalence in the square frame.
        Vec u(3), pu(3);
        for (std::size_t k = 0; k < 3; ++k) {
            u[k] = dot3(frame.axes[k], to_vec3(s.y));
            pu[k] = dot3(frame.axes[k], to_vec3(s.py));
        }
        const double d3 = energy_d3(u, pu, g);
        const double reduced = energy_reduced(s, rs, g);

        return std::array<double, 8>{
            rel(tri_closed, general),          rel(sq_full, general),
            rel(sq_half, general),             rel(tri_consolidated, general),
            rel(sq_consolidated, general),     rel(d3, reduced),
            rel(sq_consolidated_full, general), rel(sq_consolidated, general)};
    });

    rep.threefold_closed_vs_general = res[0];
    rep.fourfold_closed_full_vs_general = res[1];
    rep.fourfold_closed_half_vs_general = res[2];
    rep.threefold_consolidated_vs_general = res[3];
    rep.fourfold_consolidated_vs_general = res[4];
    rep.d3_vs_reduced = res[5];
    rep.kinetic_full_residual = res[6];
    rep.kinetic_half_residual = res[7];

    const bool full_ok = rep.kinetic_full_residual <= mode_tol;
    const bool half_ok = rep.kinetic_half_residual <= mode_tol;
    if (full_ok && half_ok)
        rep.kinetic_mode_matched = "both";
    else if (full_ok)
        rep.kinetic_mode_matched = "full";
    else if (half_ok)
        rep.kinetic_mode_matched = "half";
    else
        rep.kinetic_mode_matched = "none";

    rep.threefold_fit = chart_fit_search(
        [](double th, double ph) { return angular_closed_n4_threefold(th, ph, 0.0, 0.0, 1.0); },
        Chart::root13_aligned, seed);
    rep.fourfold_fit = chart_fit_search(
        [](double th, double ph) {
            return angular_closed_n4_fourfold(th, ph, 0.0, 0.0, 1.0, KineticMode::half);
        },
        Chart::square_frame, seed);
    return rep;
}

double BracketsReport::max_residual() const {
    return std::max({r1, r2, r3, h_i, h_f, h_k, r3_alternate});
}

json BracketsReport::to_json() const {
    json j;
    j["suite"] = "brackets";
    j["samples"] = samples;
    j["seed"] = seed;
    j["mode"] = analytic ? "analytic" : "finite_difference";
    j["residuals"]["i_f_vs_3k"] = r1;
    j["residuals"]["i_k_vs_minus_6if"] = r2;
    j["residuals"]["k_f_vs_cubic"] = r3;
    j["residuals"]["h_i"] = h_i;
    j["residuals"]["h_f"] = h_f;
    j["residuals"]["h_k"] = h_k;
    j["residuals"]["k_f_alternate_form"] = r3_alternate;
    j["max_residual"] = max_residual();
    return j;
}

BracketsReport verify_brackets(int samples, std::uint64_t seed, bool analytic, bool parallel) {
    BracketsReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.analytic = analytic;

    const auto res = max_sweep<7>(samples, parallel, [&](int i) {
        const PolarState ps = sample_polar_state(seed, static_cast<std::uint64_t>(i));
        const double g = sample_coupling(seed, static_cast<std::uint64_t>(i));
        const Vec z{ps.r, ps.phi, ps.p_r, ps.p_phi};

        BracketConfig cfg;
        cfg.mode = analytic ? BracketConfig::Mode::analytic_if_available
                            : BracketConfig::Mode::finite_difference;
        cfg.fd_step = 1e-5;

        const auto relations = bracket_relations_report(ps, g, cfg);

        BracketConfig scaled = cfg;
        scaled.normalization = BracketConfig::Normalization::term_scaled;
        const ScalarField fh = polar_field_h(g);
        const double hi = std::abs(poisson_bracket(fh, polar_field_i(g), z, scaled));
        const double hf = std::abs(poisson_bracket(fh, polar_field_f(g), z, scaled));
        const double hk = std::abs(poisson_bracket(fh, polar_field_k(g), z, scaled));

        const ObservableSet o = evaluate_observables(ps, g);
        const double h3 = o.h_reduced * o.h_reduced * o.h_reduced;
        const double form_a = 3.0 * (8.0 * h3 - o.f_integral * o.f_integral);
        const double den = 2.0 * o.i_angular - 9.0 * g;
        double alt = 0.0;
        if (std::abs(den) > 1e-9 * std::max(1.0, 9.0 * g)) {
            const double form_b =
                3.0 * (o.k_integral * o.k_integral + 9.0 * g * o.f_integral * o.f_integral) / den;
            alt = rel(form_a, form_b);
        }

        return std::array<double, 7>{std::abs(relations.r1), std::abs(relations.r2),
                                     std::abs(relations.r3), hi, hf, hk, alt};
    });

    rep.r1 = res[0];
    rep.r2 = res[1];
    rep.r3 = res[2];
    rep.h_i = res[3];
    rep.h_f = res[4];
    rep.h_k = res[5];
    rep.r3_alternate = res[6];
    return rep;
}

double KsqReport::max_residual() const {
    return std::max(max_sweep_residual, std::abs(worked_point_residual));
}

json KsqReport::to_json() const {
    json j;
    j["suite"] = "ksq";
    j["samples"] = samples;
    j["seed"] = seed;
    j["residuals"]["sweep"] = max_sweep_residual;
    j["residuals"]["worked_point"] = worked_point_residual;
    j["max_residual"] = max_residual();
    return j;
}

KsqReport verify_ksq(int samples, std::uint64_t seed, bool parallel) {
    KsqReport rep;
    rep.samples = samples;
    rep.seed = seed;

    const auto res = max_sweep<1>(samples, parallel, [&](int i) {
        const PolarState ps = sample_polar_state(seed, static_cast<std::uint64_t>(i));
        const double g = sample_coupling(seed, static_cast<std::uint64_t>(i));
        return std::array<double, 1>{std::abs(check_ksq(ps, g))};
    });
    rep.max_sweep_residual = res[0];
    rep.worked_point_residual = check_ksq({1.0, kPi / 12.0, 1.0, 0.0}, 1.0);
    return rep;
}

double HiggsReport::max_residual() const { return max_decomposition_residual; }

json HiggsReport::to_json() const {
    json j;
    j["suite"] = "higgs";
    j["samples"] = samples;
    j["seed"] = seed;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["residuals"]["decomposition"] = max_decomposition_residual;
    j["max_residual"] = max_residual();
    return j;
}

HiggsReport verify_higgs(int samples, std::uint64_t seed, int n_min, int n_max, bool parallel) {
    HiggsReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.n_min = n_min;
    rep.n_max = n_max;

    std::vector<RootSystem> systems;
    for (int n = n_min; n <= n_max; ++n) systems.push_back(root_system(n));

    const auto res = max_sweep<1>(samples, parallel, [&](int i) {
        const auto& rs = systems[static_cast<std::size_t>(i) % systems.size()];
        RandomStream rng(seed, static_cast<std::uint64_t>(i));
        const Vec n_hat = sample_unit_direction(rs, rng);
        const double g = sample_coupling(seed, static_cast<std::uint64_t>(i));

        const Vec zero(n_hat.size(), 0.0);
        const double potential = angular_energy_general(n_hat, zero, rs, g);
        const HiggsSplit split = higgs_split(n_hat, rs, g);
        return std::array<double, 1>{rel(split.constant + split.oscillator_sum, potential)};
    });
    rep.max_decomposition_residual = res[0];
    return rep;
}

double EnergySplitReport::max_residual() const { return max_additivity_residual; }

json EnergySplitReport::to_json() const {
    json j;
    j["suite"] = "energy_split";
    j["samples"] = samples;
    j["seed"] = seed;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["residuals"]["additivity"] = max_additivity_residual;
    j["max_residual"] = max_residual();
    return j;
}

EnergySplitReport verify_energy_split(int samples, std::uint64_t seed, int n_min, int n_max,
                                      bool parallel) {
    EnergySplitReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.n_min = n_min;
    rep.n_max = n_max;

    std::vector<RootSystem> systems;
    for (int n = n_min; n <= n_max; ++n) systems.push_back(root_system(n));

    const auto res = max_sweep<1>(samples, parallel, [&](int i) {
        const auto& rs = systems[static_cast<std::size_t>(i) % systems.size()];
        const int n = rs.n_particles;
        const PhaseState state = sample_phase_state(n, seed, static_cast<std::uint64_t>(i));
        const double g = sample_coupling(seed, static_cast<std::uint64_t>(i));
        const ModelParams params{n, g};

        const double full = energy_full(state, params);
        const ComSplit split = com_split(state, params);
        const double reduced = energy_reduced(split.reduced, rs, g);
        return std::array<double, 1>{rel(full, 0.5 * split.p_com * split.p_com + reduced)};
    });
    rep.max_additivity_residual = res[0];
    return rep;
}

}  // namespace calogero::verify
