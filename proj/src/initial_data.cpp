#include "imcf/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace imcf {

GraphFunction cap(double lambda0, int m, Mode mode, int m_theta) {
    if (lambda0 <= 1.0) throw ConfigError("cap: lambda0 must be > 1");
    return GraphFunction::make(mode, m, lambda0, m_theta);
}

GraphFunction perturbed_cap_profile(double lambda0, double amplitude, int m,
                                    Mode mode, int m_theta) {
    GraphFunction u = GraphFunction::make(mode, m, lambda0, m_theta);
    for (int j = 0; j < m; ++j) {
        const double r = mode == Mode::Interval ? std::abs(u.coord(j)) : u.coord(j);
        const double val = lambda0 + amplitude * std::cos(std::numbers::pi * r);
        for (int k = 0; k < u.m_theta; ++k) u.at(j, k) = val;
    }
    return u;
}

GraphFunction perturbed_cap(double lambda0, double amplitude, int m, Mode mode,
                            int m_theta) {
    GraphFunction u = perturbed_cap_profile(lambda0, amplitude, m, mode, m_theta);
    auto report = validate(u);
    if (!report.pass) {
        std::string what = "perturbed_cap: inadmissible initial data:";
        for (const auto& r : report.reasons) what += " " + r + ";";
        throw InadmissibleData(what, std::move(report));
    }
    return u;
}

AdmissibilityReport validate(const GraphFunction& u0, double neumann_tol) {
    AdmissibilityReport rep;
    rep.neumann_residual = neumann_residual(u0);

    double min_u = u0.values[0];
    for (double v : u0.values) min_u = std::min(min_u, v);
    rep.min_u_minus_1 = min_u - 1.0;

    const auto field = geometry_field(u0);
    rep.min_kappa = field.samples[0].kappa[0];
    rep.graph_condition_min = -field.samples[0].lambda_dot_normal;
    rep.max_normal_e0 = field.samples[0].normal[0];
    for (const auto& s : field.samples) {
        rep.min_kappa = std::min(rep.min_kappa, s.kappa[0]);
        rep.graph_condition_min =
            std::min(rep.graph_condition_min, -s.lambda_dot_normal);
        rep.max_normal_e0 = std::max(rep.max_normal_e0, s.normal[0]);
    }
    rep.rim_height = field.at(u0.m - 1).w;
    for (int k = 0; k < field.m_theta; ++k)
        rep.rim_height = std::min(rep.rim_height, field.at(u0.m - 1, k).w);
    if (u0.mode == Mode::Interval)
        rep.rim_height = std::min(rep.rim_height, field.at(0).w);

    if (rep.neumann_residual > neumann_tol)
        rep.reasons.push_back("neumann_residual exceeds tolerance");
    if (!(rep.min_kappa > 0.0))
        rep.reasons.push_back("not strictly convex (min kappa <= 0)");
    if (!(rep.min_u_minus_1 > 0.0)) rep.reasons.push_back("u <= 1 somewhere");
    if (!(rep.rim_height > 0.0))
        rep.reasons.push_back("boundary not in the open hemisphere");
    if (!(rep.graph_condition_min > 0.0))
        rep.reasons.push_back("graph condition <df/dlambda, N> < 0 violated");
    rep.pass = rep.reasons.empty();
    return rep;
}

}  // namespace imcf
