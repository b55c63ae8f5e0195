#pragma once

#include <vector>

#include "imcf/chart.hpp"
#include "imcf/graph_function.hpp"
#include "imcf/smallvec.hpp"

namespace imcf {

/// Extrinsic geometry of the graph surface X = f(x, u(x)) at one node.
/// For n = 1 only the leading slots of the 2x2 blocks are meaningful.
/// Ambient vectors are padded to 3 components (component 0 = e0).
struct GeometrySample {
    Vec3 X{};        ///< embedding point
    Vec3 normal{};   ///< unit normal, fixed by <df/dlambda, N> < 0
    Vec3 dX[2]{};    ///< coordinate tangents X_i (chart coordinates)
    double v = 1.0;      ///< graph gradient factor, v^2 = 1 + sigma^{ij} u_i u_j
    double e_psi = 0.0;  ///< conformal factor of the chart at (x, u)
    SymMat<2> g{};       ///< induced metric
    SymMat<2> g_inv{};
    SymMat<2> h{};       ///< second fundamental form (Gaussian formula sign)
    double kappa[2]{};   ///< principal curvatures, ascending
    double H = 0.0;      ///< mean curvature = trace(g_inv h)
    double w = 0.0;      ///< height <X, e0>
    double lambda_dot_normal = 0.0;  ///< <df/dlambda, N>, negative on graphs
};

struct GeometryField {
    Mode mode = Mode::Axisymmetric;
    int n = 2;
    int m = 0;
    int m_theta = 1;
    double h = 0.0;
    std::vector<GeometrySample> samples;

    const GeometrySample& at(int j, int k = 0) const {
        return samples[static_cast<std::size_t>(j) * m_theta + k];
    }
};

/// Evaluate the full extrinsic geometry of u. Throws NonFiniteGeometry with
/// the offending node index on NaN/overflow.
GeometryField geometry_field(const GraphFunction& u,
                             BoundaryTreatment bt = BoundaryTreatment::OneSided);
/// Buffer-reusing variant for the flow loop.
void geometry_field(const GraphFunction& u, BoundaryTreatment bt,
                    GeometryField& out);

/// Meridian curve of an axisymmetric (or interval-mode) surface:
/// s = distance of X from the e0 axis (signed coordinate for Interval mode),
/// z = <X, e0>, sampled on the radial grid.
struct MeridianProfile {
    Mode mode = Mode::Axisymmetric;
    double h = 0.0;
    std::vector<double> s, z;
};

MeridianProfile profile_from(const GeometryField& field);

/// Principal curvatures from the surface-of-revolution formulas, an
/// independent second path to kappa (fourth-order profile stencils; never
/// touches the metric machinery). Interval mode: kappa_parallel is empty and
/// H = kappa_meridian. The pole's kappa_parallel takes the umbilic limit.
struct ProfileCurvatures {
    std::vector<double> kappa_meridian;
    std::vector<double> kappa_parallel;  // empty for Interval mode
};

ProfileCurvatures axisym_curvatures(const MeridianProfile& profile);

/// Outward in-surface unit conormal at a boundary node, plus the boundary
/// submanifold tangent (Polar2D) and its normal inside the sphere.
struct BoundaryFrame {
    int j = 0, k = 0;      ///< node indices (radial, angular)
    double n_grid[2]{};    ///< contravariant components in grid coords (r[,theta] / x)
    double n_cart[2]{};    ///< same vector in chart-Cartesian components
    double z_cart[2]{};    ///< z_I (Polar2D only; zero otherwise)
    Vec3 dX_n{};           ///< ambient image of n_tilde
    Vec3 nu{};             ///< normal of the boundary submanifold inside S^n (= N)
};

std::vector<BoundaryFrame> boundary_frame(const GraphFunction& u);
std::vector<BoundaryFrame> boundary_frame(const GraphFunction& u,
                                          const GeometryField& field);

/// Second-order one-sided derivative of a nodal scalar field along n_tilde,
/// one value per boundary frame. `field` is laid out like u.values.
std::vector<double> directional_boundary_derivative(
    const std::vector<double>& field, const GraphFunction& u,
    const std::vector<BoundaryFrame>& frames);

/// Surface area (n = 2) or profile length (n = 1) by composite Simpson in r
/// (trapezoid fallback when the node count is even).
double area(const GeometryField& field);

}  // namespace imcf
