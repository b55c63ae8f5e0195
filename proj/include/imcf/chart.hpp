#pragma once

#include <array>

#include "imcf/errors.hpp"
#include "imcf/smallvec.hpp"

namespace imcf {

/// Moebius coordinates for the pointed half ball B1+(0) \ {e0}:
///
///   f(x, lambda) = (4 lambda x + (1+|x|^2)(lambda^2-1) e0)
///                  / ((1+lambda)^2 + (1-lambda)^2 |x|^2),
///
/// x in the closed unit disk of R^n, lambda >= 1. The lambda = const slices
/// are spherical caps meeting the unit sphere at right angles; lambda = 1 is
/// the flat equatorial disk. All derivatives are closed-form (quotient rule
/// on the rational map), no numeric differentiation anywhere in this module.

template <int N>
struct ChartPoint {
    std::array<double, N> x{};
    double lambda = 1.0;
};

/// The map value together with its first (and optionally second) derivatives
/// at a chart point. Ambient vectors have N+1 components, component 0 = e0.
template <int N>
struct ChartJet {
    Vec<N + 1> f{};
    Vec<N + 1> df_dlambda{};
    std::array<Vec<N + 1>, N> df_dx{};
    // second order (valid when `order == 2`)
    Vec<N + 1> d2f_dlambda2{};
    std::array<Vec<N + 1>, N> d2f_dlambda_dx{};
    std::array<std::array<Vec<N + 1>, N>, N> d2f_dx2{};
    int order = 1;
};

/// Sphere carrying the slice f(D, lambda): center c(lambda) e0 with
/// c^2 - r^2 = 1 (orthogonality to the unit sphere).
struct SliceSphere {
    double center_height = 0.0;
    double radius = 0.0;
};

template <int N>
Vec<N + 1> map_point(const ChartPoint<N>& p);

template <int N>
ChartJet<N> jet(const ChartPoint<N>& p, int order);

/// e^psi = |df/dlambda|; closed form 2(1+|x|^2)/Q.
template <int N>
double conformal_factor(const ChartPoint<N>& p);

/// Reference metric sigma_ij = e^{-2 psi} <df/dx_i, df/dx_j>.
template <int N>
SymMat<N> sigma_metric(const ChartPoint<N>& p);

/// Invert the chart by damped Newton on the rotation-reduced (|x|, lambda)
/// system. Throws PointOutsideChart / NoConvergence.
template <int N>
ChartPoint<N> inverse_map(const Vec<N + 1>& q);

/// Throws DegenerateSlice at lambda = 1 (flat disk, infinite radius).
SliceSphere slice_sphere(double lambda);

extern template Vec<2> map_point<1>(const ChartPoint<1>&);
extern template Vec<3> map_point<2>(const ChartPoint<2>&);
extern template ChartJet<1> jet<1>(const ChartPoint<1>&, int);
extern template ChartJet<2> jet<2>(const ChartPoint<2>&, int);
extern template double conformal_factor<1>(const ChartPoint<1>&);
extern template double conformal_factor<2>(const ChartPoint<2>&);
extern template SymMat<1> sigma_metric<1>(const ChartPoint<1>&);
extern template SymMat<2> sigma_metric<2>(const ChartPoint<2>&);
extern template ChartPoint<1> inverse_map<1>(const Vec<2>&);
extern template ChartPoint<2> inverse_map<2>(const Vec<3>&);

}  // namespace imcf
