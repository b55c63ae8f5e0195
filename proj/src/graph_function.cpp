#include "imcf/graph_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace imcf {

int mode_dimension(Mode mode) { return mode == Mode::Interval ? 1 : 2; }

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::Interval: return "interval";
        case Mode::Axisymmetric: return "axisymmetric";
        case Mode::Polar2D: return "polar2d";
    }
    return "?";
}

Mode mode_from_name(const std::string& name) {
    if (name == "interval") return Mode::Interval;
    if (name == "axisymmetric") return Mode::Axisymmetric;
    if (name == "polar2d") return Mode::Polar2D;
    throw ConfigError("unknown mode: " + name);
}

double GraphFunction::theta(int k) const {
    return 2.0 * std::numbers::pi * k / m_theta;
}

GraphFunction GraphFunction::make(Mode mode, int m, double value, int m_theta) {
    GraphFunction u;
    u.mode = mode;
    u.m = m;
    u.m_theta = (mode == Mode::Polar2D) ? m_theta : 1;
    u.h = (mode == Mode::Interval) ? 2.0 / (m - 1) : 1.0 / (m - 1);
    u.values.assign(static_cast<std::size_t>(m) * u.m_theta, value);
    return u;
}

namespace {

void check_grid(const GraphFunction& u) {
    if (u.m < 5) throw GridTooCoarse("grid too coarse: need m >= 5");
    if (u.mode == Mode::Polar2D && (u.m_theta < 8 || u.m_theta % 8 != 0))
        throw GridTooCoarse("polar2d: m_theta must be a positive multiple of 8");
}

// 1D derivatives for Interval/Axisymmetric values.
void derive_1d(const GraphFunction& u, BoundaryTreatment bt,
               std::vector<double>& d1, std::vector<double>& d2) {
    const int m = u.m;
    const double h = u.h, h2 = h * h;
    const auto& v = u.values;
    d1.resize(m);
    d2.resize(m);
    for (int j = 1; j < m - 1; ++j) {
        d1[j] = (v[j + 1] - v[j - 1]) / (2.0 * h);
        d2[j] = (v[j + 1] - 2.0 * v[j] + v[j - 1]) / h2;
    }
    auto one_sided_right = [&](int e, int dir) {
        // dir = +1: stencil runs e, e-1, e-2, ... (outward derivative at the
        // right end); dir = -1 mirrors it for the left end.
        d1[e] = dir * (3.0 * v[e] - 4.0 * v[e - dir] + v[e - 2 * dir]) / (2.0 * h);
        d2[e] = (2.0 * v[e] - 5.0 * v[e - dir] + 4.0 * v[e - 2 * dir] -
                 v[e - 3 * dir]) / h2;
    };
    auto mirrored = [&](int e, int dir) {
        d1[e] = 0.0;
        d2[e] = 2.0 * (v[e - dir] - v[e]) / h2;
    };
    if (u.mode == Mode::Axisymmetric) {
        mirrored(0, -1);  // pole: u even in r
        if (bt == BoundaryTreatment::NeumannMirror) mirrored(m - 1, 1);
        else one_sided_right(m - 1, +1);
    } else {  // Interval: both ends on the sphere
        if (bt == BoundaryTreatment::NeumannMirror) {
            mirrored(0, -1);
            mirrored(m - 1, 1);
        } else {
            one_sided_right(0, -1);
            one_sided_right(m - 1, +1);
        }
    }
}

}  // namespace

DerivativeField differentiate(const GraphFunction& u, BoundaryTreatment bt) {
    check_grid(u);
    DerivativeField out;
    if (u.mode != Mode::Polar2D) {
        derive_1d(u, bt, out.d1, out.d2);
        return out;
    }

    const int m = u.m, K = u.m_theta;
    const double h = u.h, h2 = h * h;
    const double dth = 2.0 * std::numbers::pi / K;
    const auto n = static_cast<std::size_t>(m) * K;
    out.ux.resize(n);
    out.uy.resize(n);
    out.uxx.resize(n);
    out.uxy.resize(n);
    out.uyy.resize(n);

    auto val = [&](int j, int k) { return u.values[j * K + ((k % K) + K) % K]; };
    // ghost across the pole: u(-h, theta) = u(h, theta + pi)
    auto val_g = [&](int j, int k) { return j >= 0 ? val(j, k) : val(-j, k + K / 2); };

    for (int j = 0; j < m; ++j) {
        const double r = u.coord(j);
        for (int k = 0; k < K; ++k) {
            const std::size_t id = static_cast<std::size_t>(j) * K + k;
            if (j == 0) {
                // Pole: Cartesian stencils along the two diameters and the
                // diagonals (K divisible by 8 guarantees the angles exist).
                const int q = K / 4, o = K / 8;
                const double c = val(0, 0);
                const double e = val(1, 0), w = val(1, 2 * q);
                const double nn = val(1, q), ss = val(1, 3 * q);
                out.ux[id] = (e - w) / (2.0 * h);
                out.uy[id] = (nn - ss) / (2.0 * h);
                out.uxx[id] = (e - 2.0 * c + w) / h2;
                out.uyy[id] = (nn - 2.0 * c + ss) / h2;
                out.uxy[id] = (val(1, o) - val(1, q + o) + val(1, 2 * q + o) -
                               val(1, 3 * q + o)) / (2.0 * h2);
                continue;
            }
            double ur, urr;
            if (j == m - 1) {
                if (bt == BoundaryTreatment::NeumannMirror) {
                    ur = 0.0;
                    urr = 2.0 * (val(j - 1, k) - val(j, k)) / h2;
                } else {
                    ur = (3.0 * val(j, k) - 4.0 * val(j - 1, k) + val(j - 2, k)) /
                         (2.0 * h);
                    urr = (2.0 * val(j, k) - 5.0 * val(j - 1, k) +
                           4.0 * val(j - 2, k) - val(j - 3, k)) / h2;
                }
            } else {
                ur = (val_g(j + 1, k) - val_g(j - 1, k)) / (2.0 * h);
                urr = (val_g(j + 1, k) - 2.0 * val(j, k) + val_g(j - 1, k)) / h2;
            }
            const double ut = (val(j, k + 1) - val(j, k - 1)) / (2.0 * dth);
            const double utt =
                (val(j, k + 1) - 2.0 * val(j, k) + val(j, k - 1)) / (dth * dth);
            double urt;
            if (j == m - 1) {
                urt = (3.0 * (val(j, k + 1) - val(j, k - 1)) -
                       4.0 * (val(j - 1, k + 1) - val(j - 1, k - 1)) +
                       (val(j - 2, k + 1) - val(j - 2, k - 1))) / (4.0 * h * dth);
            } else {
                urt = (val_g(j + 1, k + 1) - val_g(j + 1, k - 1) -
                       val_g(j - 1, k + 1) + val_g(j - 1, k - 1)) / (4.0 * h * dth);
            }

            const double ct = std::cos(u.theta(k)), st = std::sin(u.theta(k));
            const double ri = 1.0 / r, ri2 = ri * ri;
            out.ux[id] = ur * ct - ut * st * ri;
            out.uy[id] = ur * st + ut * ct * ri;
            out.uxx[id] = urr * ct * ct - 2.0 * urt * st * ct * ri +
                          utt * st * st * ri2 + ur * st * st * ri +
                          2.0 * ut * st * ct * ri2;
            out.uyy[id] = urr * st * st + 2.0 * urt * st * ct * ri +
                          utt * ct * ct * ri2 + ur * ct * ct * ri -
                          2.0 * ut * st * ct * ri2;
            out.uxy[id] = urr * st * ct + urt * (ct * ct - st * st) * ri -
                          utt * st * ct * ri2 - ur * st * ct * ri +
                          ut * (st * st - ct * ct) * ri2;
        }
    }
    return out;
}

double neumann_residual(const GraphFunction& u) {
    check_grid(u);
    const auto& v = u.values;
    const int m = u.m;
    const double h = u.h;
    if (u.mode == Mode::Polar2D) {
        const int K = u.m_theta;
        double worst = 0.0;
        for (int k = 0; k < K; ++k) {
            const double d = (3.0 * v[(m - 1) * K + k] - 4.0 * v[(m - 2) * K + k] +
                              v[(m - 3) * K + k]) / (2.0 * h);
            worst = std::max(worst, std::abs(d));
        }
        return worst;
    }
    const double right =
        std::abs((3.0 * v[m - 1] - 4.0 * v[m - 2] + v[m - 3]) / (2.0 * h));
    if (u.mode == Mode::Axisymmetric) return right;
    const double left = std::abs((3.0 * v[0] - 4.0 * v[1] + v[2]) / (2.0 * h));
    return std::max(left, right);
}

double sup_u_minus_1(const GraphFunction& u) {
    double s = 0.0;
    for (double v : u.values) s = std::max(s, std::abs(v - 1.0));
    return s;
}

double sup_grad(const GraphFunction& u) {
    const auto d = differentiate(u);
    double s = 0.0;
    if (u.mode == Mode::Polar2D) {
        for (std::size_t i = 0; i < d.ux.size(); ++i)
            s = std::max(s, std::hypot(d.ux[i], d.uy[i]));
    } else {
        for (double v : d.d1) s = std::max(s, std::abs(v));
    }
    return s;
}

}  // namespace imcf
