#include <cmath>

#include "calogero/verify.hpp"
#include "doctest.h"

using namespace calogero::verify;

TEST_CASE("root sweeps are exact to rounding") {
    for (int n = 2; n <= 10; ++n) CHECK(verify_roots(n).max_residual() < 1e-12);
}

TEST_CASE("cuboctahedron construction verifies against the fixed geometry") {
    const CuboctahedronReport rep = verify_cuboctahedron();
    CHECK(rep.counts_ok);
    CHECK(rep.max_component_residual < 1e-12);
    CHECK(rep.max_square_normal_residual < 1e-10);
}

TEST_CASE("serial and parallel sweeps produce identical numbers") {
    const auto n3s = verify_identities_n3(200, 7u, false);
    const auto n3p = verify_identities_n3(200, 7u, true);
    CHECK(n3s.closed_forms == n3p.closed_forms);
    CHECK(n3s.closed_vs_general == n3p.closed_vs_general);
    CHECK(n3s.energy_split == n3p.energy_split);

    const auto ksqs = verify_ksq(200, 1u, false);
    const auto ksqp = verify_ksq(200, 1u, true);
    CHECK(ksqs.max_sweep_residual == ksqp.max_sweep_residual);

    const auto brs = verify_brackets(50, 3u, false, false);
    const auto brp = verify_brackets(50, 3u, false, true);
    CHECK(brs.r1 == brp.r1);
    CHECK(brs.r2 == brp.r2);
    CHECK(brs.r3 == brp.r3);
    CHECK(brs.h_i == brp.h_i);

    const auto angs = verify_angular_n4(60, 5u, 1e-9, false);
    const auto angp = verify_angular_n4(60, 5u, 1e-9, true);
    CHECK(angs.threefold_closed_vs_general == angp.threefold_closed_vs_general);
    CHECK(angs.fourfold_consolidated_vs_general == angp.fourfold_consolidated_vs_general);
    CHECK(angs.d3_vs_reduced == angp.d3_vs_reduced);

    const auto hs = verify_higgs(120, 11u, 3, 6, false);
    const auto hp = verify_higgs(120, 11u, 3, 6, true);
    CHECK(hs.max_decomposition_residual == hp.max_decomposition_residual);

    const auto es = verify_energy_split(70, 13u, 2, 8, false);
    const auto ep = verify_energy_split(70, 13u, 2, 8, true);
    CHECK(es.max_additivity_residual == ep.max_additivity_residual);
}

TEST_CASE("ground-truth identities pass their sweeps") {
    CHECK(verify_identities_n3(500, 7u).max_residual() < 1e-10);
    CHECK(verify_ksq(500, 1u).max_residual() < 1e-9);
    CHECK(verify_higgs(200, 2u).max_residual() < 1e-12);
    CHECK(verify_energy_split(140, 4u).max_residual() < 1e-12);

    const auto brackets_fd = verify_brackets(60, 5u, false);
    CHECK(brackets_fd.max_residual() < 1e-4);
    const auto brackets_an = verify_brackets(60, 5u, true);
    CHECK(brackets_an.r1 < 1e-7);
    CHECK(brackets_an.r2 < 1e-7);
    CHECK(brackets_an.r3 < 1e-7);
}

TEST_CASE("four-particle report: consolidated forms and mode decision") {
    const auto rep = verify_angular_n4(300, 5u);
    CHECK(rep.threefold_consolidated_vs_general < 1e-10);
    CHECK(rep.fourfold_consolidated_vs_general < 1e-10);
    CHECK(rep.d3_vs_reduced < 1e-10);
    CHECK(rep.kinetic_mode_matched == "half");
    CHECK(rep.kinetic_half_residual < 1e-10);
    CHECK(rep.kinetic_full_residual > 1e-3);
}

TEST_CASE("reports serialize with stable keys") {
    const auto j = verify_ksq(50, 1u).to_json();
    CHECK(j["suite"] == "ksq");
    CHECK(j.contains("max_residual"));
    CHECK(j["residuals"].contains("worked_point"));

    const auto ja = verify_angular_n4(40, 2u).to_json();
    CHECK(ja["kinetic_mode"].contains("matched"));
    CHECK(ja["closed_form_fit_search"].contains("threefold"));
}
