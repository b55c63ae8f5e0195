#include "imcf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace imcf {

namespace {

template <int N>
GeometrySample assemble(const ChartJet<N>& J, const double* du,
                        const double* d2u) {
    GeometrySample s;
    const double e_psi = norm(J.df_dlambda);
    const double e2 = e_psi * e_psi;

    SymMat<N> sig;
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            sig(i, j) = dot(J.df_dx[i], J.df_dx[j]) / e2;
            sig(j, i) = sig(i, j);
        }
    const SymMat<N> sig_inv = sig.inverse();

    double su[N];  // sigma^{ik} u_k
    double grad2 = 0.0;
    for (int i = 0; i < N; ++i) {
        su[i] = 0.0;
        for (int k = 0; k < N; ++k) su[i] += sig_inv(i, k) * du[k];
        grad2 += su[i] * du[i];
    }
    const double v = std::sqrt(1.0 + grad2);

    SymMat<N> g, g_inv;
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            g(i, j) = e2 * (du[i] * du[j] + sig(i, j));
            g(j, i) = g(i, j);
        }
    g_inv = g.inverse();

    // N = (sigma^{ik} u_k f_i - f_lambda) / (v e^psi): the sign that makes
    // <df/dlambda, N> < 0, i.e. caps convex toward the disk get positive h.
    Vec<N + 1> nrm{};
    for (int a = 0; a <= N; ++a) {
        double t = -J.df_dlambda[a];
        for (int i = 0; i < N; ++i) t += su[i] * J.df_dx[i][a];
        nrm[a] = t / (v * e_psi);
    }

    SymMat<N> hh;
    for (int i = 0; i < N; ++i) {
        for (int j = i; j < N; ++j) {
            // X_ij = f_ij + u_j f_{lambda i} + u_i f_{lambda j}
            //        + u_i u_j f_{lambda lambda} + u_ij f_lambda
            double hij = 0.0;
            const double uij = d2u[i * N + j];
            for (int a = 0; a <= N; ++a) {
                const double Xij = J.d2f_dx2[i][j][a] +
                                   du[j] * J.d2f_dlambda_dx[i][a] +
                                   du[i] * J.d2f_dlambda_dx[j][a] +
                                   du[i] * du[j] * J.d2f_dlambda2[a] +
                                   uij * J.df_dlambda[a];
                hij -= Xij * nrm[a];
            }
            hh(i, j) = hij;
            hh(j, i) = hij;
        }
    }

    s.v = v;
    s.e_psi = e_psi;
    s.w = J.f[0];
    for (int a = 0; a <= N; ++a) {
        s.X[a] = J.f[a];
        s.normal[a] = nrm[a];
    }
    for (int i = 0; i < N; ++i)
        for (int a = 0; a <= N; ++a)
            s.dX[i][a] = J.df_dx[i][a] + du[i] * J.df_dlambda[a];
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            s.g(i, j) = g(i, j);
            s.g_inv(i, j) = g_inv(i, j);
            s.h(i, j) = hh(i, j);
        }
    s.lambda_dot_normal = dot(J.df_dlambda, nrm);

    if constexpr (N == 1) {
        s.kappa[0] = hh(0, 0) * g_inv(0, 0);
        s.kappa[1] = s.kappa[0];
        s.H = s.kappa[0];
    } else {
        const double a00 = g_inv(0, 0) * hh(0, 0) + g_inv(0, 1) * hh(1, 0);
        const double a11 = g_inv(1, 0) * hh(0, 1) + g_inv(1, 1) * hh(1, 1);
        const double tr = a00 + a11;
        const double det = hh.det() / g.det();
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
        s.kappa[0] = 0.5 * (tr - disc);
        s.kappa[1] = 0.5 * (tr + disc);
        s.H = tr;
    }
    return s;
}

void check_finite(const GeometrySample& s, int node) {
    if (!(std::isfinite(s.H) && std::isfinite(s.v) && std::isfinite(s.kappa[0]) &&
          std::isfinite(s.X[0]) && std::isfinite(s.normal[0]) &&
          s.e_psi > 0.0 && s.g.det() > 0.0))
        throw NonFiniteGeometry("non-finite geometry at node " +
                                    std::to_string(node),
                                node);
}

}  // namespace

void geometry_field(const GraphFunction& u, BoundaryTreatment bt,
                    GeometryField& out) {
    const auto d = differentiate(u, bt);
    out.mode = u.mode;
    out.n = mode_dimension(u.mode);
    out.m = u.m;
    out.m_theta = u.m_theta;
    out.h = u.h;
    out.samples.resize(u.values.size());

    if (u.mode == Mode::Interval) {
        const int m = u.m;
#pragma omp parallel for schedule(static)
        for (int j = 0; j < m; ++j) {
            ChartPoint<1> p{{u.coord(j)}, u.values[j]};
            const auto J = jet<1>(p, 2);
            const double du1 = d.d1[j], d2u1 = d.d2[j];
            out.samples[j] = assemble<1>(J, &du1, &d2u1);
        }
    } else if (u.mode == Mode::Axisymmetric) {
        const int m = u.m;
#pragma omp parallel for schedule(static)
        for (int j = 0; j < m; ++j) {
            const double r = u.coord(j);
            ChartPoint<2> p{{r, 0.0}, u.values[j]};
            const auto J = jet<2>(p, 2);
            // Cartesian derivatives of u(|x|) evaluated on the x1 axis;
            // the angular second derivative u_22 = u'/r tends to u''(0).
            const double du[2] = {d.d1[j], 0.0};
            const double u22 = (j == 0) ? d.d2[0] : d.d1[j] / r;
            const double d2u[4] = {d.d2[j], 0.0, 0.0, u22};
            out.samples[j] = assemble<2>(J, du, d2u);
        }
    } else {
        const int m = u.m, K = u.m_theta;
#pragma omp parallel for schedule(static)
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < K; ++k) {
                const std::size_t id = static_cast<std::size_t>(j) * K + k;
                const double r = u.coord(j), th = u.theta(k);
                ChartPoint<2> p{{r * std::cos(th), r * std::sin(th)},
                                u.values[id]};
                const auto J = jet<2>(p, 2);
                const double du[2] = {d.ux[id], d.uy[id]};
                const double d2u[4] = {d.uxx[id], d.uxy[id], d.uxy[id],
                                       d.uyy[id]};
                out.samples[id] = assemble<2>(J, du, d2u);
            }
        }
    }
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        check_finite(out.samples[i], static_cast<int>(i));
}

GeometryField geometry_field(const GraphFunction& u, BoundaryTreatment bt) {
    GeometryField f;
    geometry_field(u, bt, f);
    return f;
}

MeridianProfile profile_from(const GeometryField& field) {
    if (field.mode == Mode::Polar2D)
        throw ModeUnsupported("profile_from: needs an interval or axisymmetric field");
    MeridianProfile p;
    p.mode = field.mode;
    p.h = field.h;
    const int m = field.m;
    p.s.resize(m);
    p.z.resize(m);
    for (int j = 0; j < m; ++j) {
        p.s[j] = field.samples[j].X[1];
        p.z[j] = field.samples[j].X[0];
    }
    return p;
}

namespace {

// Fourth-order stencils for the profile derivatives. Parity encodes the
// smooth continuation across the pole (s odd, z even); Interval mode uses
// one-sided stencils at both ends instead.
struct Stencil4 {
    static double d1_interior(const std::vector<double>& f, int j, double h) {
        return (-f[j + 2] + 8.0 * f[j + 1] - 8.0 * f[j - 1] + f[j - 2]) /
               (12.0 * h);
    }
    static double d2_interior(const std::vector<double>& f, int j, double h) {
        return (-f[j + 2] + 16.0 * f[j + 1] - 30.0 * f[j] + 16.0 * f[j - 1] -
                f[j - 2]) / (12.0 * h * h);
    }
    // one-sided at the last node and one in from it (offsets 0,-1,..;1,0,-1,..)
    static double d1_edge(const std::vector<double>& f, int e, int dir, double h) {
        return dir *
               (25.0 * f[e] - 48.0 * f[e - dir] + 36.0 * f[e - 2 * dir] -
                16.0 * f[e - 3 * dir] + 3.0 * f[e - 4 * dir]) / (12.0 * h);
    }
    static double d1_edge1(const std::vector<double>& f, int e, int dir, double h) {
        return dir *
               (3.0 * f[e + dir] + 10.0 * f[e] - 18.0 * f[e - dir] +
                6.0 * f[e - 2 * dir] - f[e - 3 * dir]) / (12.0 * h);
    }
    static double d2_edge(const std::vector<double>& f, int e, int dir, double h) {
        return (45.0 * f[e] - 154.0 * f[e - dir] + 214.0 * f[e - 2 * dir] -
                156.0 * f[e - 3 * dir] + 61.0 * f[e - 4 * dir] -
                10.0 * f[e - 5 * dir]) / (12.0 * h * h);
    }
    static double d2_edge1(const std::vector<double>& f, int e, int dir, double h) {
        return (10.0 * f[e + dir] - 15.0 * f[e] - 4.0 * f[e - dir] +
                14.0 * f[e - 2 * dir] - 6.0 * f[e - 3 * dir] + f[e - 4 * dir]) /
               (12.0 * h * h);
    }
};

void derive_profile(const std::vector<double>& f, double h, int parity,
                    bool has_pole, std::vector<double>& d1,
                    std::vector<double>& d2) {
    const int m = static_cast<int>(f.size());
    d1.resize(m);
    d2.resize(m);
    auto gf = [&](int j) { return j >= 0 ? f[j] : parity * f[-j]; };
    for (int j = 2; j < m - 2; ++j) {
        d1[j] = Stencil4::d1_interior(f, j, h);
        d2[j] = Stencil4::d2_interior(f, j, h);
    }
    if (has_pole) {
        for (int j : {0, 1}) {
            d1[j] = (-gf(j + 2) + 8.0 * gf(j + 1) - 8.0 * gf(j - 1) + gf(j - 2)) /
                    (12.0 * h);
            d2[j] = (-gf(j + 2) + 16.0 * gf(j + 1) - 30.0 * gf(j) +
                     16.0 * gf(j - 1) - gf(j - 2)) / (12.0 * h * h);
        }
    } else {
        d1[0] = Stencil4::d1_edge(f, 0, -1, h);
        d1[1] = Stencil4::d1_edge1(f, 1, -1, h);
        d2[0] = Stencil4::d2_edge(f, 0, -1, h);
        d2[1] = Stencil4::d2_edge1(f, 1, -1, h);
    }
    d1[m - 1] = Stencil4::d1_edge(f, m - 1, +1, h);
    d1[m - 2] = Stencil4::d1_edge1(f, m - 2, +1, h);
    d2[m - 1] = Stencil4::d2_edge(f, m - 1, +1, h);
    d2[m - 2] = Stencil4::d2_edge1(f, m - 2, +1, h);
}

}  // namespace

ProfileCurvatures axisym_curvatures(const MeridianProfile& profile) {
    const int m = static_cast<int>(profile.s.size());
    if (m < 7) throw GridTooCoarse("axisym_curvatures: need at least 7 nodes");
    const bool axi = (profile.mode == Mode::Axisymmetric);
    std::vector<double> sp, spp, zp, zpp;
    derive_profile(profile.s, profile.h, -1, axi, sp, spp);
    derive_profile(profile.z, profile.h, +1, axi, zp, zpp);

    ProfileCurvatures out;
    out.kappa_meridian.resize(m);
    if (axi) out.kappa_parallel.resize(m);
    for (int j = 0; j < m; ++j) {
        const double phi2 = sp[j] * sp[j] + zp[j] * zp[j];
        const double phi = std::sqrt(phi2);
        out.kappa_meridian[j] = (sp[j] * zpp[j] - zp[j] * spp[j]) / (phi2 * phi);
        if (axi) {
            if (j == 0) {
                // umbilic pole: kappa_p -> kappa_m
                out.kappa_parallel[j] = out.kappa_meridian[j];
            } else {
                out.kappa_parallel[j] = zp[j] / (profile.s[j] * phi);
            }
        }
    }
    return out;
}

std::vector<BoundaryFrame> boundary_frame(const GraphFunction& u,
                                          const GeometryField& field) {
    std::vector<BoundaryFrame> frames;
    const int m = u.m;
    auto make_1d = [&](int j, double dir) {
        BoundaryFrame fr;
        fr.j = j;
        const auto& s = field.at(j);
        const double n1 = dir / std::sqrt(s.g(0, 0));
        fr.n_grid[0] = n1;
        fr.n_cart[0] = n1;
        for (int a = 0; a < 3; ++a) fr.dX_n[a] = n1 * s.dX[0][a];
        fr.nu = s.normal;
        return fr;
    };
    if (u.mode == Mode::Interval) {
        frames.push_back(make_1d(0, -1.0));
        frames.push_back(make_1d(m - 1, +1.0));
    } else if (u.mode == Mode::Axisymmetric) {
        frames.push_back(make_1d(m - 1, +1.0));
    } else {
        const int K = u.m_theta;
        const double r = 1.0;
        for (int k = 0; k < K; ++k) {
            const auto& s = field.at(m - 1, k);
            const double th = u.theta(k);
            const double ct = std::cos(th), st = std::sin(th);
            // grid-coordinate basis: e_r = (ct, st), e_th = r(-st, ct);
            // metric components in (r, theta) coordinates
            const double er[2] = {ct, st};
            const double et[2] = {-r * st, r * ct};
            auto gdot = [&](const double* a, const double* b) {
                double acc = 0.0;
                for (int p = 0; p < 2; ++p)
                    for (int q = 0; q < 2; ++q) acc += s.g(p, q) * a[p] * b[q];
                return acc;
            };
            const double grt = gdot(er, et), gtt = gdot(et, et);
            // Gram-Schmidt: remove the z_I component, normalize
            double nc[2] = {er[0] - grt / gtt * et[0], er[1] - grt / gtt * et[1]};
            const double len = std::sqrt(gdot(nc, nc));
            nc[0] /= len;
            nc[1] /= len;
            BoundaryFrame fr;
            fr.j = m - 1;
            fr.k = k;
            fr.n_cart[0] = nc[0];
            fr.n_cart[1] = nc[1];
            // back to (r, theta) components
            fr.n_grid[0] = nc[0] * ct + nc[1] * st;
            fr.n_grid[1] = (-nc[0] * st + nc[1] * ct) / r;
            fr.z_cart[0] = et[0];
            fr.z_cart[1] = et[1];
            for (int a = 0; a < 3; ++a)
                fr.dX_n[a] = nc[0] * s.dX[0][a] + nc[1] * s.dX[1][a];
            fr.nu = s.normal;
            frames.push_back(fr);
        }
    }
    return frames;
}

std::vector<BoundaryFrame> boundary_frame(const GraphFunction& u) {
    return boundary_frame(u, geometry_field(u));
}

std::vector<double> directional_boundary_derivative(
    const std::vector<double>& field, const GraphFunction& u,
    const std::vector<BoundaryFrame>& frames) {
    if (field.size() != u.values.size())
        throw Error("directional_boundary_derivative: field/grid size mismatch");
    if (u.m < 5) throw GridTooCoarse("directional derivative: need m >= 5");
    const int m = u.m, K = u.m_theta;
    const double h = u.h;
    std::vector<double> out;
    out.reserve(frames.size());
    for (const auto& fr : frames) {
        auto f = [&](int j, int k) {
            return field[static_cast<std::size_t>(j) * K + (((k % K) + K) % K)];
        };
        const int j = fr.j, k = fr.k;
        const int dir = (j == 0) ? -1 : +1;  // Interval left end
        const double dr =
            dir * (3.0 * f(j, k) - 4.0 * f(j - dir, k) + f(j - 2 * dir, k)) /
            (2.0 * h);
        double val = fr.n_grid[0] * dr;
        if (u.mode == Mode::Polar2D) {
            const double dth = 2.0 * std::numbers::pi / K;
            const double dt = (f(j, k + 1) - f(j, k - 1)) / (2.0 * dth);
            val += fr.n_grid[1] * dt;
        }
        out.push_back(val);
    }
    return out;
}

double area(const GeometryField& field) {
    const int m = field.m;
    std::vector<double> integrand(m);
    if (field.mode == Mode::Interval) {
        for (int j = 0; j < m; ++j)
            integrand[j] = std::sqrt(field.samples[j].g(0, 0));
    } else if (field.mode == Mode::Axisymmetric) {
        for (int j = 0; j < m; ++j) {
            const double r = j * field.h;
            const auto& s = field.samples[j];
            integrand[j] =
                2.0 * std::numbers::pi * r * std::sqrt(s.g(0, 0) * s.g(1, 1));
        }
    } else {
        const int K = field.m_theta;
        const double dth = 2.0 * std::numbers::pi / K;
        for (int j = 0; j < m; ++j) {
            const double r = j * field.h;
            double ring = 0.0;
            for (int k = 0; k < K; ++k)
                ring += std::sqrt(std::max(0.0, field.at(j, k).g.det()));
            integrand[j] = r * ring * dth;
        }
    }
    // composite Simpson when the interval count is even, else trapezoid
    const double h = field.h;
    if ((m - 1) % 2 == 0) {
        double acc = integrand[0] + integrand[m - 1];
        for (int j = 1; j < m - 1; ++j) acc += (j % 2 ? 4.0 : 2.0) * integrand[j];
        return acc * h / 3.0;
    }
    double acc = 0.5 * (integrand[0] + integrand[m - 1]);
    for (int j = 1; j < m - 1; ++j) acc += integrand[j];
    return acc * h;
}

}  // namespace imcf
