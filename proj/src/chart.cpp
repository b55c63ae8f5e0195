#include "imcf/chart.hpp"

#include <algorithm>
#include <cmath>

namespace imcf {

namespace {

// Numerator P (vector) and denominator Q of the chart, with their partials.
// P^0 = (1+|x|^2)(lambda^2-1), P^i = 4 lambda x^i,
// Q   = (1+lambda)^2 + (1-lambda)^2 |x|^2.
template <int N>
struct RationalParts {
    double r2, Q, Ql, Qll;
    std::array<double, N> Qx, Qlx;
    // Q_xx = 2 (1-lambda)^2 delta_ij
    double Qxx_diag;
};

template <int N>
RationalParts<N> parts(const ChartPoint<N>& p) {
    RationalParts<N> s{};
    const double l = p.lambda;
    double r2 = 0.0;
    for (int i = 0; i < N; ++i) r2 += p.x[i] * p.x[i];
    s.r2 = r2;
    const double om = (1.0 - l) * (1.0 - l);
    s.Q = (1.0 + l) * (1.0 + l) + om * r2;
    s.Ql = 2.0 * (1.0 + l) + 2.0 * (l - 1.0) * r2;
    s.Qll = 2.0 + 2.0 * r2;
    for (int i = 0; i < N; ++i) {
        s.Qx[i] = 2.0 * om * p.x[i];
        s.Qlx[i] = 4.0 * (l - 1.0) * p.x[i];
    }
    s.Qxx_diag = 2.0 * om;
    return s;
}

}  // namespace

template <int N>
Vec<N + 1> map_point(const ChartPoint<N>& p) {
    const auto s = parts(p);
    const double l = p.lambda;
    Vec<N + 1> f{};
    f[0] = (1.0 + s.r2) * (l * l - 1.0) / s.Q;
    for (int i = 0; i < N; ++i) f[i + 1] = 4.0 * l * p.x[i] / s.Q;
    return f;
}

template <int N>
ChartJet<N> jet(const ChartPoint<N>& p, int order) {
    const auto s = parts(p);
    const double l = p.lambda;
    const double lm1 = l * l - 1.0;

    ChartJet<N> J;
    J.order = order;

    // P and partials
    Vec<N + 1> P{}, Pl{}, Pll{};
    std::array<Vec<N + 1>, N> Px{}, Plx{};
    P[0] = (1.0 + s.r2) * lm1;
    Pl[0] = 2.0 * l * (1.0 + s.r2);
    Pll[0] = 2.0 * (1.0 + s.r2);
    for (int i = 0; i < N; ++i) {
        P[i + 1] = 4.0 * l * p.x[i];
        Pl[i + 1] = 4.0 * p.x[i];
        Px[i][0] = 2.0 * p.x[i] * lm1;
        Px[i][i + 1] = 4.0 * l;
        Plx[i][0] = 4.0 * l * p.x[i];
        Plx[i][i + 1] = 4.0;
    }

    const double invQ = 1.0 / s.Q;
    for (int a = 0; a <= N; ++a) J.f[a] = P[a] * invQ;
    for (int a = 0; a <= N; ++a) J.df_dlambda[a] = (Pl[a] - J.f[a] * s.Ql) * invQ;
    for (int i = 0; i < N; ++i)
        for (int a = 0; a <= N; ++a)
            J.df_dx[i][a] = (Px[i][a] - J.f[a] * s.Qx[i]) * invQ;

    if (order < 2) return J;

    for (int a = 0; a <= N; ++a)
        J.d2f_dlambda2[a] =
            (Pll[a] - 2.0 * J.df_dlambda[a] * s.Ql - J.f[a] * s.Qll) * invQ;
    for (int i = 0; i < N; ++i)
        for (int a = 0; a <= N; ++a)
            J.d2f_dlambda_dx[i][a] = (Plx[i][a] - J.df_dlambda[a] * s.Qx[i] -
                                      J.df_dx[i][a] * s.Ql - J.f[a] * s.Qlx[i]) *
                                     invQ;
    for (int i = 0; i < N; ++i) {
        for (int j = i; j < N; ++j) {
            // P_xx: P^0_ij = 2 delta_ij lm1, P^k_ij = 0
            Vec<N + 1> Pxx{};
            double Qxx = 0.0;
            if (i == j) {
                Pxx[0] = 2.0 * lm1;
                Qxx = s.Qxx_diag;
            }
            for (int a = 0; a <= N; ++a) {
                J.d2f_dx2[i][j][a] = (Pxx[a] - J.df_dx[i][a] * s.Qx[j] -
                                      J.df_dx[j][a] * s.Qx[i] - J.f[a] * Qxx) *
                                     invQ;
            }
            J.d2f_dx2[j][i] = J.d2f_dx2[i][j];
        }
    }
    return J;
}

template <int N>
double conformal_factor(const ChartPoint<N>& p) {
    const auto s = parts(p);
    return 2.0 * (1.0 + s.r2) / s.Q;
}

template <int N>
SymMat<N> sigma_metric(const ChartPoint<N>& p) {
    const auto J = jet(p, 1);
    const double epsi = conformal_factor(p);
    const double inv_e2 = 1.0 / (epsi * epsi);
    SymMat<N> sig;
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            sig(i, j) = dot(J.df_dx[i], J.df_dx[j]) * inv_e2;
            sig(j, i) = sig(i, j);
        }
    return sig;
}

SliceSphere slice_sphere(double lambda) {
    if (lambda <= 1.0)
        throw DegenerateSlice("slice_sphere: lambda = 1 slice is the flat disk");
    const double d = lambda * lambda - 1.0;
    return SliceSphere{(lambda * lambda + 1.0) / d, 2.0 * lambda / d};
}

namespace {

// The rotation-reduced inverse problem: find (rho, lambda) with
// f0(rho,lambda) = height, fr(rho,lambda) = axis distance. This is exactly
// the N=1 chart restricted to rho >= 0.
struct Reduced {
    double f0, fr, f0_r, fr_r, f0_l, fr_l;
};

Reduced reduced_jet(double rho, double lambda) {
    ChartPoint<1> p{{rho}, lambda};
    const auto J = jet<1>(p, 1);
    return Reduced{J.f[0],        J.f[1],        J.df_dx[0][0],
                   J.df_dx[0][1], J.df_dlambda[0], J.df_dlambda[1]};
}

}  // namespace

template <int N>
ChartPoint<N> inverse_map(const Vec<N + 1>& q) {
    const double qn = norm(q);
    const double height = q[0];
    if (qn > 1.0 + 1e-12 || height < -1e-12)
        throw PointOutsideChart("inverse_map: point not in the upper half ball");
    double s2 = 0.0;
    for (int i = 1; i <= N; ++i) s2 += q[i] * q[i];
    const double s = std::sqrt(s2);
    if (s < 1e-14 && std::abs(height - 1.0) < 1e-14)
        throw PointOutsideChart("inverse_map: e0 is excluded from the chart");

    // Damped Newton on (rho, lambda), started at (projection, 1).
    double rho = std::min(s, 1.0), lambda = 1.0;
    auto residual = [&](double r, double l, double& e0, double& e1) {
        const Reduced R = reduced_jet(r, l);
        e0 = R.f0 - height;
        e1 = R.fr - s;
        return std::sqrt(e0 * e0 + e1 * e1);
    };
    double e0, e1;
    double res = residual(rho, lambda, e0, e1);
    bool converged = res < 1e-14;
    for (int it = 0; it < 100 && !converged; ++it) {
        const Reduced R = reduced_jet(rho, lambda);
        const double det = R.f0_r * R.fr_l - R.f0_l * R.fr_r;
        if (std::abs(det) < 1e-300)
            throw NoConvergence("inverse_map: singular Newton system");
        double dr = (-e0 * R.fr_l + e1 * R.f0_l) / det;
        double dl = (-R.f0_r * e1 + R.fr_r * e0) / det;
        double stepsize = 1.0;
        for (int back = 0; back < 40; ++back) {
            double rn = std::clamp(rho + stepsize * dr, 0.0, 1.0);
            double ln = std::max(lambda + stepsize * dl, 1.0);
            double ne0, ne1;
            const double nres = residual(rn, ln, ne0, ne1);
            if (nres < res) {
                rho = rn;
                lambda = ln;
                res = nres;
                e0 = ne0;
                e1 = ne1;
                break;
            }
            stepsize *= 0.5;
        }
        converged = res < 1e-13;
    }
    if (!converged)
        throw NoConvergence("inverse_map: Newton failed within 100 iterations");

    ChartPoint<N> out;
    out.lambda = lambda;
    if (s > 0.0) {
        for (int i = 0; i < N; ++i) out.x[i] = rho * q[i + 1] / s;
    }
    return out;
}

template Vec<2> map_point<1>(const ChartPoint<1>&);
template Vec<3> map_point<2>(const ChartPoint<2>&);
template ChartJet<1> jet<1>(const ChartPoint<1>&, int);
template ChartJet<2> jet<2>(const ChartPoint<2>&, int);
template double conformal_factor<1>(const ChartPoint<1>&);
template double conformal_factor<2>(const ChartPoint<2>&);
template SymMat<1> sigma_metric<1>(const ChartPoint<1>&);
template SymMat<2> sigma_metric<2>(const ChartPoint<2>&);
template ChartPoint<1> inverse_map<1>(const Vec<2>&);
template ChartPoint<2> inverse_map<2>(const Vec<3>&);

}  // namespace imcf
