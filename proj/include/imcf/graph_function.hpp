#pragma once

#include <string>
#include <vector>

#include "imcf/errors.hpp"

namespace imcf {

/// Grid layout for the graph height u >= 1 over the unit disk.
///  - Interval:      n = 1, x in [-1, 1], m nodes, h = 2/(m-1)
///  - Axisymmetric:  n = 2, u = u(r), r in [0, 1], m nodes, h = 1/(m-1)
///  - Polar2D:       n = 2, u = u(r, theta), m radial nodes, m_theta angles
///                   (uniform, periodic; m_theta divisible by 8 so the pole
///                   stencils can see both diameters and the diagonals)
enum class Mode { Interval, Axisymmetric, Polar2D };

int mode_dimension(Mode mode);
std::string mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

struct GraphFunction {
    Mode mode = Mode::Axisymmetric;
    int m = 0;        ///< nodes along the grid coordinate (r or x)
    int m_theta = 1;  ///< angular nodes (Polar2D only)
    double h = 0.0;   ///< radial / interval spacing
    std::vector<double> values;  ///< Polar2D layout: values[j*m_theta + k]

    int node_count() const { return static_cast<int>(values.size()); }
    double& at(int j, int k = 0) { return values[j * m_theta + k]; }
    double at(int j, int k = 0) const { return values[j * m_theta + k]; }

    /// Grid coordinate of radial node j (r, or x for Interval mode).
    double coord(int j) const {
        return mode == Mode::Interval ? -1.0 + j * h : j * h;
    }
    double theta(int k) const;

    static GraphFunction make(Mode mode, int m, double value, int m_theta = 64);
};

/// How the outer boundary (|x| = 1) is differenced.
///  - OneSided: second-order one-sided stencils, valid for arbitrary data;
///    used for measuring Neumann residuals.
///  - NeumannMirror: even-reflection ghost across the boundary, which is the
///    flow's enforcement of the homogeneous Neumann condition.
enum class BoundaryTreatment { OneSided, NeumannMirror };

/// First and second derivatives of u per node, in the coordinates the
/// geometry kernel consumes:
///  - Interval / Axisymmetric: d/dx resp. d/dr and the second derivative.
///  - Polar2D: Cartesian du/dx1, du/dx2 and the Cartesian Hessian, obtained
///    from the polar grid (pole via diameter stencils).
struct DerivativeField {
    std::vector<double> d1;              // Interval/Axisymmetric
    std::vector<double> d2;
    std::vector<double> ux, uy;          // Polar2D
    std::vector<double> uxx, uxy, uyy;
};

/// Throws GridTooCoarse when m < 5 (or the angular grid is unusable).
DerivativeField differentiate(const GraphFunction& u,
                              BoundaryTreatment bt = BoundaryTreatment::OneSided);

/// One-sided second-order outward derivative of u at the boundary.
/// Interval mode returns the larger magnitude of the two ends;
/// Polar2D the max over the rim. This is the Neumann residual |du/dr|(1).
double neumann_residual(const GraphFunction& u);

/// max over nodes (by mode): sup |u - 1| and sup |Du| (grid-coordinate
/// gradient magnitude, one-sided at boundaries).
double sup_u_minus_1(const GraphFunction& u);
double sup_grad(const GraphFunction& u);

}  // namespace imcf
