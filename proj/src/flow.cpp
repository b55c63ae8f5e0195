#include "imcf/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace imcf {

std::string stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::FlatnessReached: return "FlatnessReached";
        case StopReason::HFloorReached: return "HFloorReached";
        case StopReason::ConvexityLost: return "ConvexityLost";
        case StopReason::ChartBreakdown: return "ChartBreakdown";
        case StopReason::StepUnderflow: return "StepUnderflow";
        case StopReason::MaxTimeReached: return "MaxTimeReached";
        case StopReason::NonFiniteGeometry: return "NonFiniteGeometry";
    }
    return "?";
}

StopReason stop_reason_from_name(const std::string& name) {
    for (StopReason r :
         {StopReason::FlatnessReached, StopReason::HFloorReached,
          StopReason::ConvexityLost, StopReason::ChartBreakdown,
          StopReason::StepUnderflow, StopReason::MaxTimeReached,
          StopReason::NonFiniteGeometry})
        if (stop_reason_name(r) == name) return r;
    throw ConfigError("unknown stop reason: " + name);
}

double flat_limit_area(int n) { return n == 1 ? 2.0 : std::numbers::pi; }

DiagnosticsScalars diagnostics_scalars(const GraphFunction& u,
                                       const GeometryField& field) {
    DiagnosticsScalars d;
    d.area = area(field);
    const auto& s0 = field.samples[0];
    d.min_H = d.max_H = s0.H;
    d.min_kappa = s0.kappa[0];
    d.max_kappa = s0.kappa[field.n - 1];
    d.min_w = s0.w;
    d.max_abs_X = 0.0;
    for (const auto& s : field.samples) {
        d.min_H = std::min(d.min_H, s.H);
        d.max_H = std::max(d.max_H, s.H);
        d.min_kappa = std::min(d.min_kappa, s.kappa[0]);
        d.max_kappa = std::max(d.max_kappa, s.kappa[field.n - 1]);
        d.min_w = std::min(d.min_w, s.w);
        d.max_abs_X = std::max(d.max_abs_X, norm(s.X));
    }
    d.rim_height = field.at(u.m - 1).w;
    d.rim_radius = std::abs(field.at(u.m - 1).X[1]);
    for (int k = 1; k < field.m_theta; ++k)
        d.rim_height = std::min(d.rim_height, field.at(u.m - 1, k).w);
    d.sup_u_minus_1 = sup_u_minus_1(u);
    d.sup_du = sup_grad(u);
    d.neumann_residual = neumann_residual(u);
    return d;
}

namespace {

struct StabilityInfo {
    double min_H = 0.0;
    double min_kappa = 0.0;
    double min_u = 0.0;
    double min_H2_over_gmax = 0.0;  ///< min over nodes of H^2 / lmax(g^inv)
};

// speed = -v/(e^psi H) into `out`; gathers the stability scalars in the same
// sweep. Uses NeumannMirror differencing (the flow's boundary enforcement).
StabilityInfo speed_field(const GraphFunction& u, GeometryField& buf,
                          std::vector<double>& out) {
    geometry_field(u, BoundaryTreatment::NeumannMirror, buf);
    out.resize(buf.samples.size());
    StabilityInfo info;
    info.min_H = buf.samples[0].H;
    info.min_kappa = buf.samples[0].kappa[0];
    info.min_u = u.values[0];
    info.min_H2_over_gmax = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < buf.samples.size(); ++i) {
        const auto& s = buf.samples[i];
        out[i] = -s.v / (s.e_psi * s.H);
        info.min_H = std::min(info.min_H, s.H);
        info.min_kappa = std::min(info.min_kappa, s.kappa[0]);
        info.min_u = std::min(info.min_u, u.values[i]);
        double gmax;
        if (buf.n == 1) {
            gmax = s.g_inv(0, 0);
        } else {
            const double tr = s.g_inv(0, 0) + s.g_inv(1, 1);
            const double dd = s.g_inv(0, 0) - s.g_inv(1, 1);
            gmax = 0.5 * (tr + std::sqrt(dd * dd +
                                         4.0 * s.g_inv(0, 1) * s.g_inv(0, 1)));
        }
        info.min_H2_over_gmax =
            std::min(info.min_H2_over_gmax, s.H * s.H / gmax);
    }
    return info;
}

}  // namespace

std::vector<double> rhs(const GraphFunction& u, double eps_H) {
    GeometryField buf;
    std::vector<double> out;
    const auto info = speed_field(u, buf, out);
    if (info.min_H <= eps_H)
        throw SpeedBlowup("rhs: min H = " + std::to_string(info.min_H) +
                          " at the H floor");
    return out;
}

void step(FlowState& state, const TimeStepPolicy& policy, double t_limit) {
    thread_local GeometryField buf;
    thread_local std::vector<double> k1, k2;
    const auto info = speed_field(state.u, buf, k1);
    if (info.min_H <= policy.eps_H)
        throw SpeedBlowup("step: H floor reached");

    double dt = std::min(policy.dt_max,
                         policy.cfl * state.u.h * state.u.h *
                             info.min_H2_over_gmax);
    if (t_limit >= 0.0) dt = std::min(dt, t_limit - state.t);
    if (dt < 1e-12)
        throw StepUnderflowError("step: dt = " + std::to_string(dt));

    GraphFunction mid = state.u;
    for (std::size_t i = 0; i < mid.values.size(); ++i)
        mid.values[i] += dt * k1[i];
    speed_field(mid, buf, k2);
    for (std::size_t i = 0; i < state.u.values.size(); ++i)
        state.u.values[i] += 0.5 * dt * (k1[i] + k2[i]);

    state.t += dt;
    state.dt_last = dt;
    state.steps += 1;
}

RunResult run(const GraphFunction& u0, const TimeStepPolicy& policy) {
    RunResult res;
    FlowState st;
    st.u = u0;

    GeometryField buf, buf2;
    std::vector<double> speeds, k2;
    GraphFunction mid = u0;

    auto record = [&](const GeometryField& field) {
        Snapshot snap;
        snap.t = st.t;
        snap.step = st.steps;
        snap.u = st.u.values;
        snap.diag = diagnostics_scalars(st.u, field);
        st.diagnostics_cache = snap.diag;
        res.trajectory.push_back(std::move(snap));
    };

    while (true) {
        StabilityInfo info;
        try {
            info = speed_field(st.u, buf, speeds);
        } catch (const NonFiniteGeometry&) {
            res.stop = StopReason::NonFiniteGeometry;
            break;
        }
        const bool due = (st.steps % policy.record_every == 0);
        if (due) record(buf);

        if (info.min_u < 1.0) {
            res.stop = StopReason::ChartBreakdown;
            break;
        }
        if (info.min_kappa <= 0.0) {
            res.stop = StopReason::ConvexityLost;
            break;
        }
        if (sup_u_minus_1(st.u) <= policy.eps_flat) {
            res.stop = StopReason::FlatnessReached;
            break;
        }
        if (info.min_H <= policy.eps_H) {
            res.stop = StopReason::HFloorReached;
            break;
        }
        if (st.t >= policy.t_max) {
            res.stop = StopReason::MaxTimeReached;
            break;
        }

        double dt = std::min(policy.dt_max, policy.cfl * st.u.h * st.u.h *
                                                info.min_H2_over_gmax);
        dt = std::min(dt, policy.t_max - st.t);
        if (dt < 1e-12) {
            res.stop = StopReason::StepUnderflow;
            break;
        }

        try {
            GraphFunction mid = st.u;
            for (std::size_t i = 0; i < mid.values.size(); ++i)
                mid.values[i] += dt * speeds[i];
            thread_local GeometryField buf2;
            thread_local std::vector<double> k2;
            speed_field(mid, buf2, k2);
            for (std::size_t i = 0; i < st.u.values.size(); ++i)
                st.u.values[i] += 0.5 * dt * (speeds[i] + k2[i]);
            st.t += dt;
            st.dt_last = dt;
            st.steps += 1;
        } catch (const NonFiniteGeometry&) {
            res.stop = StopReason::NonFiniteGeometry;
            break;
        } catch (const SpeedBlowup&) {
            res.stop = StopReason::HFloorReached;
            break;
        }
    }

    // final snapshot (unless the loop recorded this exact step already)
    if (res.trajectory.empty() || res.trajectory.back().step != st.steps) {
        try {
            geometry_field(st.u, BoundaryTreatment::NeumannMirror, buf);
            record(buf);
        } catch (const NonFiniteGeometry&) {
            // leave the last good snapshot as the final record
        }
    }
    res.final_state = std::move(st);
    return res;
}

SingularTimeEstimate extrapolate_singular_time(
    const std::vector<std::pair<double, double>>& series, int n) {
    SingularTimeEstimate est;
    if (series.size() < 10)
        throw AreaLawViolated("extrapolate_singular_time: need >= 10 samples",
                              est);
    const double A0 = series.front().second;

    // regression of ln A on t
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    const auto count = static_cast<double>(series.size());
    for (const auto& [t, A] : series) {
        const double y = std::log(A);
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    const double denom = count * stt - st * st;
    est.slope = denom > 0.0 ? (count * sty - st * sy) / denom : 0.0;

    for (const auto& [t, A] : series)
        est.max_residual =
            std::max(est.max_residual, std::abs(A * std::exp(-t) / A0 - 1.0));
    est.t_star = std::log(flat_limit_area(n) / A0);

    if (est.max_residual > 0.02)
        throw AreaLawViolated(
            "extrapolate_singular_time: area-law residual " +
                std::to_string(est.max_residual) + " exceeds 2%",
            est);
    return est;
}

}  // namespace imcf
