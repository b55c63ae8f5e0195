#pragma once

#include <string>
#include <vector>

#include "imcf/geometry.hpp"
#include "imcf/graph_function.hpp"

namespace imcf {

/// Gate values for an initial surface: strictly convex graph meeting the
/// sphere perpendicularly from the inside, boundary in the open hemisphere.
struct AdmissibilityReport {
    double neumann_residual = 0.0;  ///< one-sided |du/dr| at the rim
    double min_kappa = 0.0;
    double min_u_minus_1 = 0.0;
    double rim_height = 0.0;            ///< <X, e0> at the boundary
    double graph_condition_min = 0.0;   ///< min of -<df/dlambda, N>
    double max_normal_e0 = 0.0;         ///< max <N, e0> (empirical surrogate for C0)
    bool pass = false;
    std::vector<std::string> reasons;   ///< failed gates, empty when pass
};

struct InadmissibleData : Error {
    AdmissibilityReport report;
    InadmissibleData(const std::string& what, AdmissibilityReport r)
        : Error(what), report(std::move(r)) {}
};

/// Spherical cap u == lambda0 (umbilic, kappa = (lambda0^2-1)/(2 lambda0)).
GraphFunction cap(double lambda0, int m, Mode mode = Mode::Axisymmetric,
                  int m_theta = 64);

/// u0 = lambda0 + a cos(pi r); both endpoint derivative conditions hold
/// analytically. Throws InadmissibleData when validate fails.
GraphFunction perturbed_cap(double lambda0, double amplitude, int m,
                            Mode mode = Mode::Axisymmetric, int m_theta = 64);

/// The raw profile without the admissibility gate (for tests probing failures).
GraphFunction perturbed_cap_profile(double lambda0, double amplitude, int m,
                                    Mode mode = Mode::Axisymmetric,
                                    int m_theta = 64);

AdmissibilityReport validate(const GraphFunction& u0,
                             double neumann_tol = 1e-3);

}  // namespace imcf
