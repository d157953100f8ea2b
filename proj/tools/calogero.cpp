// Command-line front end: root-system export, cuboctahedron geometry export,
// identity verification sweeps, and trajectory simulation.
//
// Exit codes: 0 success, 1 verification or integration failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "calogero/charts.hpp"
#include "calogero/dynamics.hpp"
#include "calogero/errors.hpp"
#include "calogero/geometry.hpp"
#include "calogero/hamiltonians.hpp"
#include "calogero/verify.hpp"
#include "json.hpp"

namespace {

using namespace calogero;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Fixed 17-significant-digit decimal formatting for all numeric text output.
std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParameterError("cannot open output file '" + path + "'");
    out << content;
}

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw InvalidParameterError("malformed number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidParameterError("empty value list");
    return out;
}

// ---------------------------------------------------------------- roots ----

int cmd_roots(int n, const std::string& format, const std::string& out_path) {
    const RootSystem rs = root_system(n);

    if (format == "json") {
        ordered_json j;
        j["n"] = n;
        j["roots"] = ordered_json::array();
        for (const auto& e : rs.entries) {
            ordered_json entry;
            entry["pair"] = {e.i, e.j};
            entry["vector"] = e.vector;
            j["roots"].push_back(entry);
        }
        ordered_json matrix = ordered_json::array();
        for (const auto& ea : rs.entries) {
            ordered_json row = ordered_json::array();
            for (const auto& eb : rs.entries) row.push_back(dot(ea.vector, eb.vector));
            matrix.push_back(row);
        }
        j["cosine_matrix"] = matrix;
        write_output(out_path, j.dump(2) + "\n");
        return kExitOk;
    }

    // Single RFC-4180-style table: pair label, components, cosines against
    // every pair.
    std::string csv = "i,j";
    for (int k = 1; k < n; ++k) csv += ",b_" + std::to_string(k);
    for (const auto& e : rs.entries)
        csv += ",cos_" + std::to_string(e.i) + "_" + std::to_string(e.j);
    csv += "\n";
    for (const auto& ea : rs.entries) {
        csv += std::to_string(ea.i) + "," + std::to_string(ea.j);
        for (double v : ea.vector) csv += "," + num17(v);
        for (const auto& eb : rs.entries) csv += "," + num17(dot(ea.vector, eb.vector));
        csv += "\n";
    }
    write_output(out_path, csv);
    return kExitOk;
}

// ------------------------------------------------------------- geometry ----

int cmd_geometry(const std::string& format, const std::string& out_path) {
    const Cuboctahedron solid = build_cuboctahedron();

    if (format == "obj") {
        std::string obj = "# cuboctahedron: 12 vertices, 24 edges, 8 triangles, 6 squares\n";
        for (const auto& v : solid.vertices)
            obj += "v " + num17(v.coords[0]) + " " + num17(v.coords[1]) + " " +
                   num17(v.coords[2]) + "\n";
        for (const auto& e : solid.edges)
            obj += "l " + std::to_string(e.first + 1) + " " + std::to_string(e.second + 1) + "\n";
        for (const auto& t : solid.triangles)
            obj += "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " +
                   std::to_string(t[2] + 1) + "\n";
        for (const auto& s : solid.squares)
            obj += "f " + std::to_string(s[0] + 1) + " " + std::to_string(s[1] + 1) + " " +
                   std::to_string(s[2] + 1) + " " + std::to_string(s[3] + 1) + "\n";
        write_output(out_path, obj);
        return kExitOk;
    }

    ordered_json j;
    j["solid"] = "cuboctahedron";
    j["vertices"] = ordered_json::array();
    for (std::size_t i = 0; i < solid.vertices.size(); ++i) {
        const auto& v = solid.vertices[i];
        ordered_json entry;
        entry["index"] = i + 1;
        entry["pair"] = {v.i, v.j};
        entry["sign"] = v.sign;
        entry["coords"] = {v.coords[0], v.coords[1], v.coords[2]};
        j["vertices"].push_back(entry);
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : solid.edges) j["edges"].push_back({e.first + 1, e.second + 1});
    j["faces"]["triangles"] = ordered_json::array();
    for (const auto& t : solid.triangles)
        j["faces"]["triangles"].push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    j["faces"]["squares"] = ordered_json::array();
    for (const auto& s : solid.squares)
        j["faces"]["squares"].push_back({s[0] + 1, s[1] + 1, s[2] + 1, s[3] + 1});
    j["frame"] = ordered_json::array();
    for (const auto& axis : solid.frame.axes) j["frame"].push_back({axis[0], axis[1], axis[2]});
    write_output(out_path, j.dump(2) + "\n");
    return kExitOk;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const std::string& suite, int n, int samples, std::optional<std::uint64_t> seed,
               std::optional<double> tol_opt, const std::string& mode, bool serial,
               const std::string& out_path) {
    const bool parallel = !serial;
    const bool randomized = suite != "roots";
    if (randomized && !seed)
        throw InvalidParameterError("suite '" + suite + "' requires an explicit --seed");

    ordered_json report;
    double max_residual = 0.0;
    double tol = 0.0;

    if (suite == "roots") {
        tol = tol_opt.value_or(1e-12);
        const auto rep = verify::verify_roots(n);
        report = rep.to_json();
        max_residual = rep.max_residual();
    } else if (suite == "identities_n3") {
        tol = tol_opt.value_or(1e-10);
        const auto rep = verify::verify_identities_n3(samples, *seed, parallel);
        report = rep.to_json();
        max_residual = rep.max_residual();
    } else if (suite == "angular_n4") {
        tol = tol_opt.value_or(1e-9);
        const auto rep = verify::verify_angular_n4(samples, *seed, tol, parallel);
        report = rep.to_json();
        max_residual = rep.max_residual();
    } else if (suite == "brackets") {
        const bool analytic = mode == "analytic";
        tol = tol_opt.value_or(analytic ? 1e-7 : 1e-4);
        const auto rep = verify::verify_brackets(samples, *seed, analytic, parallel);
        report = rep.to_json();
        max_residual = rep.max_residual();
    } else {
        tol = tol_opt.value_or(1e-9);
        const auto rep = verify::verify_ksq(samples, *seed, parallel);
        report = rep.to_json();
        max_residual = rep.max_residual();
    }

    const bool pass = max_residual <= tol;
    report["tolerance"] = tol;
    report["pass"] = pass;
    write_output(out_path, report.dump(2) + "\n");
    std::cerr << "suite " << suite << ": max residual " << num17(max_residual) << ", tolerance "
              << num17(tol) << " -> " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitFailure;
}

// ------------------------------------------------------------- simulate ----

ReducedPhaseState load_init(const std::string& init_path, const std::string& y_text,
                            const std::string& py_text, std::size_t dim) {
    ReducedPhaseState state;
    if (!init_path.empty()) {
        std::ifstream in(init_path);
        if (!in) throw InvalidParameterError("cannot open init file '" + init_path + "'");
        nlohmann::json j;
        try {
            in >> j;
            state.y = j.at("y").get<std::vector<double>>();
            state.py = j.at("py").get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            throw InvalidParameterError(std::string("malformed init file: ") + e.what());
        }
    } else {
        if (y_text.empty() || py_text.empty())
            throw InvalidParameterError("simulate needs either --init or both --y and --py");
        state.y = parse_csv_doubles(y_text);
        state.py = parse_csv_doubles(py_text);
    }
    if (state.y.size() != dim || state.py.size() != dim)
        throw InvalidParameterError("initial state must have " + std::to_string(dim) +
                                    " coordinates and momenta");
    return state;
}

int cmd_simulate(int n, double g, const std::string& init_path, const std::string& y_text,
                 const std::string& py_text, double dt, long steps, long stride,
                 const std::string& out_path) {
    const ModelParams params{n, g};
    params.validate();
    const auto dim = static_cast<std::size_t>(n - 1);
    const ReducedPhaseState state0 = load_init(init_path, y_text, py_text, dim);
    if (stride < 1) throw InvalidParameterError("stride must be >= 1");
    for (const auto& e : root_system(n).entries)
        if (std::abs(dot(e.vector, state0.y)) < 1e-8)
            throw InvalidInputError("initial state sits on the (" + std::to_string(e.i) + "," +
                                    std::to_string(e.j) + ") collision hyperplane");

    std::vector<std::string> monitors{"h_reduced", "i_angular"};
    if (n == 3) {
        monitors.push_back("f_integral");
        monitors.push_back("k_integral");
    }

    std::string header = "t";
    for (std::size_t k = 1; k <= dim; ++k) header += ",y" + std::to_string(k);
    for (std::size_t k = 1; k <= dim; ++k) header += ",py" + std::to_string(k);
    for (const auto& m : monitors) header += "," + m;
    header += "\n";

    std::ostringstream body;
    Trajectory collected;
    collected.dt = dt;
    collected.record_stride = stride;

    auto append_sample = [&](const TrajectorySample& sample) {
        body << num17(sample.t);
        for (double v : sample.state.y) body << "," << num17(v);
        for (double v : sample.state.py) body << "," << num17(v);
        for (const auto& obs : sample.observables) body << "," << num17(obs.second);
        body << "\n";
        collected.samples.push_back(sample);
    };

    // Advance chunk by chunk so an abort still leaves the rows produced so
    // far in the output file; restarting leapfrog at a recorded state is
    // exact, so this matches one long run bit for bit.
    int exit_code = kExitOk;
    try {
        ReducedPhaseState state = state0;
        const Trajectory first = integrate(state, params, dt, 1, 1, monitors);
        append_sample(first.samples.front()); // t = 0 row

        long done = 0;
        while (done < steps) {
            const long chunk = std::min(stride, steps - done);
            const Trajectory t = integrate(state, params, dt, chunk, chunk, monitors);
            state = t.samples.back().state;
            done += chunk;
            TrajectorySample sample = t.samples.back();
            sample.t = static_cast<double>(done) * dt;
            append_sample(sample);
        }
    } catch (const IntegrationAbortedError& e) {
        body << "# aborted: " << e.what() << "\n";
        exit_code = kExitFailure;
    }

    write_output(out_path, header + body.str());

    if (collected.samples.size() >= 2) {
        for (const auto& [name, stats] : conservation_report(collected))
            std::cerr << "drift " << name << ": max_abs " << num17(stats.max_abs_drift)
                      << ", max_rel " << num17(stats.max_rel_drift) << "\n";
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-center spherical-oscillator reduction of the inverse-square model: "
                 "geometry export, identity verification, trajectory simulation"};
    app.require_subcommand(1);

    // roots
    auto* roots = app.add_subcommand("roots", "emit root vectors and the cosine matrix");
    int roots_n = 3;
    std::string roots_format = "json", roots_out;
    roots->add_option("--n", roots_n, "particle count (>= 2)")->required();
    roots->add_option("--format", roots_format)->check(CLI::IsMember({"json", "csv"}));
    roots->add_option("--out", roots_out, "output path (default stdout)");

    // geometry
    auto* geometry = app.add_subcommand("geometry", "emit the N=4 force-center solid");
    std::string solid = "cuboctahedron", geo_format = "json", geo_out;
    geometry->add_option("--solid", solid)->check(CLI::IsMember({"cuboctahedron"}));
    geometry->add_option("--format", geo_format)->check(CLI::IsMember({"json", "obj"}));
    geometry->add_option("--out", geo_out, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    std::string suite, ver_mode = "fd", ver_out;
    int ver_n = 8, ver_samples = 1000;
    std::optional<std::uint64_t> ver_seed;
    std::optional<double> ver_tol;
    bool ver_serial = false;
    verify_cmd->add_option("--suite", suite, "roots|identities_n3|angular_n4|brackets|ksq")
        ->required()
        ->check(CLI::IsMember({"roots", "identities_n3", "angular_n4", "brackets", "ksq"}));
    verify_cmd->add_option("--n", ver_n, "particle count for the roots suite (default 8)");
    verify_cmd->add_option("--samples", ver_samples, "sample count (default 1000)");
    verify_cmd->add_option("--seed", ver_seed, "RNG seed; required for randomized suites");
    verify_cmd->add_option("--tol", ver_tol, "pass tolerance (default depends on suite)");
    verify_cmd->add_option("--mode", ver_mode, "brackets gradient mode: fd|analytic")
        ->check(CLI::IsMember({"fd", "analytic"}));
    verify_cmd->add_flag("--serial", ver_serial, "disable the OpenMP sweep path");
    verify_cmd->add_option("--out", ver_out, "report path (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "integrate a reduced trajectory");
    int sim_n = 3;
    double sim_g = 1.0, sim_dt = 1e-4;
    long sim_steps = 100000, sim_stride = 100;
    std::string sim_init, sim_y, sim_py, sim_out, sim_format = "csv";
    simulate->add_option("--n", sim_n, "particle count (>= 2)")->required();
    simulate->add_option("--g", sim_g, "coupling")->required();
    simulate->add_option("--init", sim_init, "JSON file with fields y, py");
    simulate->add_option("--y", sim_y, "comma-separated initial coordinates");
    simulate->add_option("--py", sim_py, "comma-separated initial momenta");
    simulate->add_option("--dt", sim_dt, "time step")->required();
    simulate->add_option("--steps", sim_steps, "step count")->required();
    simulate->add_option("--stride", sim_stride, "record every this many steps (default 100)");
    simulate->add_option("--out", sim_out, "CSV path (default stdout)");
    simulate->add_option("--format", sim_format)->check(CLI::IsMember({"csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (roots->parsed()) return cmd_roots(roots_n, roots_format, roots_out);
        if (geometry->parsed()) return cmd_geometry(geo_format, geo_out);
        if (verify_cmd->parsed())
            return cmd_verify(suite, ver_n, ver_samples, ver_seed, ver_tol, ver_mode,
                              ver_serial, ver_out);
        if (simulate->parsed())
            return cmd_simulate(sim_n, sim_g, sim_init, sim_y, sim_py, sim_dt, sim_steps,
                                sim_stride, sim_out);
    } catch (const InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SingularConfigurationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
