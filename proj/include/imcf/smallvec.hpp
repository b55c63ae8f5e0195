#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace imcf {

/// Fixed-size ambient vector. Component 0 is the e0 (axis) direction.
template <std::size_t K>
using Vec = std::array<double, K>;

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

template <std::size_t K>
inline double dot(const Vec<K>& a, const Vec<K>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < K; ++i) s += a[i] * b[i];
    return s;
}

template <std::size_t K>
inline double norm(const Vec<K>& a) {
    return std::sqrt(dot(a, a));
}

template <std::size_t K>
inline Vec<K> operator+(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r{};
    for (std::size_t i = 0; i < K; ++i) r[i] = a[i] + b[i];
    return r;
}

template <std::size_t K>
inline Vec<K> operator-(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r{};
    for (std::size_t i = 0; i < K; ++i) r[i] = a[i] - b[i];
    return r;
}

template <std::size_t K>
inline Vec<K> operator*(double c, const Vec<K>& a) {
    Vec<K> r{};
    for (std::size_t i = 0; i < K; ++i) r[i] = c * a[i];
    return r;
}

/// Symmetric n-by-n matrix for n in {1,2}, stored dense.
template <int N>
struct SymMat {
    std::array<std::array<double, N>, N> a{};

    double& operator()(int i, int j) { return a[i][j]; }
    double operator()(int i, int j) const { return a[i][j]; }

    double det() const {
        if constexpr (N == 1) return a[0][0];
        else return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    }

    SymMat inverse() const {
        SymMat inv;
        if constexpr (N == 1) {
            inv.a[0][0] = 1.0 / a[0][0];
        } else {
            const double d = det();
            inv.a[0][0] = a[1][1] / d;
            inv.a[1][1] = a[0][0] / d;
            inv.a[0][1] = inv.a[1][0] = -a[0][1] / d;
        }
        return inv;
    }
};

}  // namespace imcf
