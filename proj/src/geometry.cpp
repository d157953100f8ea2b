#include "calogero/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "calogero/errors.hpp"

namespace calogero {

Mat jacobi_matrix(int n) {
    if (n < 2) throw InvalidParameterError("jacobi_matrix: n must be >= 2");
    const auto nn = static_cast<std::size_t>(n);
    Mat a(nn, nn);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < nn; ++k) a(k, 0) = inv_sqrt_n;
    // Column m couples particle m against the tail m+1..N (1-based labels).
    for (std::size_t m = 1; m < nn; ++m) {
        const double nm = static_cast<double>(nn - m);
        a(m - 1, m) = std::sqrt(nm / (nm + 1.0));
        const double tail = -1.0 / std::sqrt((nm + 1.0) * nm);
        for (std::size_t k = m; k < nn; ++k) a(k, m) = tail;
    }
    return a;
}

ComSplit com_split(const PhaseState& state, const ModelParams& params) {
    params.validate();
    const auto n = static_cast<std::size_t>(params.n_particles);
    if (state.x.size() != n || state.p.size() != n)
        throw InvalidInputError("com_split: state dimension does not match n_particles");

    const Mat a = jacobi_matrix(params.n_particles);
    const Vec y_all = matvec_t(a, state.x);
    const Vec py_all = matvec_t(a, state.p);

    ComSplit out;
    out.y0 = y_all[0];
    out.p_com = py_all[0];
    out.reduced.y.assign(y_all.begin() + 1, y_all.end());
    out.reduced.py.assign(py_all.begin() + 1, py_all.end());
    return out;
}

PhaseState com_join(double y0, double p_com, const ReducedPhaseState& reduced,
                    const ModelParams& params) {
    params.validate();
    const auto n = static_cast<std::size_t>(params.n_particles);
    if (reduced.y.size() != n - 1 || reduced.py.size() != n - 1)
        throw InvalidInputError("com_join: reduced state dimension does not match n_particles");

    Vec y_all(n), py_all(n);
    y_all[0] = y0;
    py_all[0] = p_com;
    std::copy(reduced.y.begin(), reduced.y.end(), y_all.begin() + 1);
    std::copy(reduced.py.begin(), reduced.py.end(), py_all.begin() + 1);

    const Mat a = jacobi_matrix(params.n_particles);
    return PhaseState{matvec(a, y_all), matvec(a, py_all)};
}

const Vec& RootSystem::vector(int i, int j) const {
    for (const auto& e : entries)
        if (e.i == i && e.j == j) return e.vector;
    throw InvalidInputError("RootSystem: unknown pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
}

RootSystem root_system(int n) {
    if (n < 2) throw InvalidParameterError("root_system: n must be >= 2");
    const Mat a = jacobi_matrix(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    RootSystem rs;
    rs.n_particles = n;
    rs.entries.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            RootSystem::Entry e;
            e.i = i;
            e.j = j;
            e.vector.resize(static_cast<std::size_t>(n - 1));
            for (int k = 1; k < n; ++k)
                e.vector[static_cast<std::size_t>(k - 1)] =
                    (a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k)) -
                     a(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k))) *
                    inv_sqrt2;
            rs.entries.push_back(std::move(e));
        }
    }
    return rs;
}

double pairwise_cosine(const RootSystem& rs, std::pair<int, int> a, std::pair<int, int> b) {
    return dot(rs.vector(a.first, a.second), rs.vector(b.first, b.second));
}

Frame3 orthogonal_frame(const RootSystem& rs) {
    if (rs.n_particles != 4)
        throw InvalidInputError("orthogonal_frame: requires the N=4 root system");
    const Vec3 b12 = to_vec3(rs.vector(1, 2));
    const Vec3 b13 = to_vec3(rs.vector(1, 3));
    const Vec3 b14 = to_vec3(rs.vector(1, 4));
    const Vec3 b23 = to_vec3(rs.vector(2, 3));
    const Vec3 b24 = to_vec3(rs.vector(2, 4));
    const Vec3 b34 = to_vec3(rs.vector(3, 4));
    return Frame3{{cross3(b12, b34), cross3(b13, b24), cross3(b14, b23)}};
}

std::vector<Vec3> cuboctahedron_vertices() {
    const RootSystem rs = root_system(4);
    std::vector<Vec3> v;
    v.reserve(12);
    for (const auto& e : rs.entries) v.push_back(to_vec3(e.vector));
    for (const auto& e : rs.entries) v.push_back(scale3(to_vec3(e.vector), -1.0));
    return v;
}

namespace {

// Edge criterion: every pairwise cosine of the solid is in {+-1, +-1/2, 0}
// exactly, so a loose angular window is safe.
constexpr double kEdgeCosTol = 1e-9;

bool adjacent(const Vec3& u, const Vec3& v) { return std::abs(dot3(u, v) - 0.5) < kEdgeCosTol; }

}  // namespace

Cuboctahedron build_cuboctahedron() {
    const RootSystem rs = root_system(4);
    Cuboctahedron solid;
    solid.frame = orthogonal_frame(rs);

    for (int sign : {+1, -1})
        for (const auto& e : rs.entries)
            solid.vertices.push_back(
                {e.i, e.j, sign, sign > 0 ? to_vec3(e.vector) : scale3(to_vec3(e.vector), -1.0)});

    const int nv = static_cast<int>(solid.vertices.size());
    for (int p = 0; p < nv; ++p)
        for (int q = p + 1; q < nv; ++q)
            if (adjacent(solid.vertices[p].coords, solid.vertices[q].coords))
                solid.edges.emplace_back(p, q);

    // Triangles are 3-cliques of the edge graph.
    for (int p = 0; p < nv; ++p)
        for (int q = p + 1; q < nv; ++q) {
            if (!adjacent(solid.vertices[p].coords, solid.vertices[q].coords)) continue;
            for (int r = q + 1; r < nv; ++r)
                if (adjacent(solid.vertices[p].coords, solid.vertices[r].coords) &&
                    adjacent(solid.vertices[q].coords, solid.vertices[r].coords))
                    solid.triangles.push_back({p, q, r});
        }

    // Squares: a square is two orthogonal diagonals {p,q} and {r,s} whose
    // endpoints interleave as the cycle p, r, q, s. Every vertex has exactly
    // two cos = 0 partners, so enumerating diagonal pairs finds each square
    // twice; keep the orientation where the first diagonal holds the smallest
    // index.
    for (int p = 0; p < nv; ++p)
        for (int q = p + 1; q < nv; ++q) {
            if (std::abs(dot3(solid.vertices[p].coords, solid.vertices[q].coords)) > kEdgeCosTol)
                continue;
            for (int r = 0; r < nv; ++r) {
                if (r == p || r == q) continue;
                if (!adjacent(solid.vertices[p].coords, solid.vertices[r].coords) ||
                    !adjacent(solid.vertices[q].coords, solid.vertices[r].coords))
                    continue;
                for (int s = r + 1; s < nv; ++s) {
                    if (s == p || s == q) continue;
                    if (std::abs(dot3(solid.vertices[r].coords, solid.vertices[s].coords)) >
                        kEdgeCosTol)
                        continue;
                    if (adjacent(solid.vertices[p].coords, solid.vertices[s].coords) &&
                        adjacent(solid.vertices[q].coords, solid.vertices[s].coords) &&
                        p < std::min(r, s))
                        solid.squares.push_back({p, r, q, s});
                }
            }
        }

    return solid;
}

}  // namespace calogero
