#pragma once

#include <utility>
#include <vector>

#include "calogero/linalg.hpp"
#include "calogero/model.hpp"

namespace calogero {

// Orthogonal center-of-mass transformation x = A y for n particles.
// Column 0 is the uniform center-of-mass direction; columns 1..n-1 span the
// relative motion. A^T A = 1 holds to rounding by construction.
Mat jacobi_matrix(int n);

struct ComSplit {
    double y0 = 0.0;    // center-of-mass coordinate, (sum x_i)/sqrt(N)
    double p_com = 0.0; // conjugate momentum, (sum p_i)/sqrt(N)
    ReducedPhaseState reduced;
};

ComSplit com_split(const PhaseState& state, const ModelParams& params);
PhaseState com_join(double y0, double p_com, const ReducedPhaseState& reduced,
                    const ModelParams& params);

// Unit vectors b^{ij} locating the pair-interaction hyperplanes in the
// center-of-mass frame; one entry per pair 1 <= i < j <= N.
struct RootSystem {
    struct Entry {
        int i = 0, j = 0; // 1-based particle labels, i < j
        Vec vector;       // length N-1, unit norm
    };

    int n_particles = 0;
    std::vector<Entry> entries;

    std::size_t size() const { return entries.size(); }
    // Throws InvalidInputError for an unknown pair.
    const Vec& vector(int i, int j) const;
};

RootSystem root_system(int n);

// Dot product of two root vectors; equals
// (delta_ii' + delta_jj' - delta_ij' - delta_i'j)/2 by orthogonality of A.
double pairwise_cosine(const RootSystem& rs, std::pair<int, int> a, std::pair<int, int> b);

// Orthonormal frame built from cross products of the three orthogonal root
// pairs of the four-particle system; the axes are normal to the square faces
// of the cuboctahedron.
struct Frame3 {
    std::array<Vec3, 3> axes; // a_1, a_2, a_3
};

Frame3 orthogonal_frame(const RootSystem& rs);

// The twelve +-b^{ij} directions of the four-particle system.
std::vector<Vec3> cuboctahedron_vertices();

// Full combinatorial solid: vertices with pair provenance, the 24 edges found
// at angular separation pi/3, and the 8 triangular / 6 square faces.
struct Cuboctahedron {
    struct Vertex {
        int i = 0, j = 0; // pair label of the generating root
        int sign = +1;    // +1 for b^{ij}, -1 for the opposite vertex
        Vec3 coords{};
    };

    std::vector<Vertex> vertices;               // size 12
    std::vector<std::pair<int, int>> edges;     // size 24, 0-based vertex indices
    std::vector<std::array<int, 3>> triangles;  // size 8, cyclic order
    std::vector<std::array<int, 4>> squares;    // size 6, cyclic order
    Frame3 frame;                               // square-face normals
};

Cuboctahedron build_cuboctahedron();

}  // namespace calogero
