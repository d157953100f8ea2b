#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace calogero {

using Vec = std::vector<double>;
using Vec3 = std::array<double, 3>;

// Small dense row-major matrix, sized at runtime.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline double dot(const Vec& u, const Vec& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

inline Vec matvec(const Mat& m, const Vec& v) {
    Vec out(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

// out = m^T v; for orthogonal m this is the inverse map.
inline Vec matvec_t(const Mat& m, const Vec& v) {
    Vec out(m.cols, 0.0);
    for (std::size_t j = 0; j < m.cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) s += m(i, j) * v[i];
        out[j] = s;
    }
    return out;
}

inline double dot3(const Vec3& u, const Vec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Vec3 cross3(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline double norm3(const Vec3& v) { return std::sqrt(dot3(v, v)); }

inline Vec3 scale3(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

inline Vec3 to_vec3(const Vec& v) { return {v[0], v[1], v[2]}; }

}  // namespace calogero
