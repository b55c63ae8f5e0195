#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imcf/geometry.hpp"
#include "imcf/graph_function.hpp"
#include "imcf/initial_data.hpp"

namespace imcf {

/// Why a run terminated. ConvexityLost on admissible data at adequate
/// resolution indicates a discretization failure, not flow behavior.
enum class StopReason {
    FlatnessReached,
    HFloorReached,
    ConvexityLost,
    ChartBreakdown,
    StepUnderflow,
    MaxTimeReached,
    NonFiniteGeometry,
};

std::string stop_reason_name(StopReason r);
StopReason stop_reason_from_name(const std::string& name);

struct TimeStepPolicy {
    double cfl = 0.4;        ///< fraction of the explicit parabolic limit
    double dt_max = 1e-2;
    double eps_H = 0.05;     ///< H floor: stop before the speed blows up
    double eps_flat = 1e-3;  ///< sup(u-1) threshold for FlatnessReached
    double t_max = 10.0;
    int record_every = 100;  ///< snapshot cadence in steps
    double t_warmup = 0.05;  ///< flow-emergent identities asserted after this
    double neumann_tol = 1e-3;
};

/// Scalars derived from one geometry evaluation; cached on the state and
/// attached to snapshots.
struct DiagnosticsScalars {
    double area = 0.0;
    double min_H = 0.0, max_H = 0.0;
    double min_kappa = 0.0, max_kappa = 0.0;
    double rim_height = 0.0;
    double rim_radius = 0.0;
    double sup_u_minus_1 = 0.0;
    double sup_du = 0.0;
    double min_w = 0.0;
    double max_abs_X = 0.0;
    double neumann_residual = 0.0;
};

DiagnosticsScalars diagnostics_scalars(const GraphFunction& u,
                                       const GeometryField& field);

struct FlowState {
    double t = 0.0;
    GraphFunction u;
    double dt_last = 0.0;
    long steps = 0;
    DiagnosticsScalars diagnostics_cache;
};

struct Snapshot {
    double t = 0.0;
    long step = 0;
    std::vector<double> u;
    DiagnosticsScalars diag;
};

/// Nodal speed -v/(e^psi H). Throws SpeedBlowup when min H <= eps_H.
std::vector<double> rhs(const GraphFunction& u, double eps_H = 0.0);

/// One Heun (two-stage explicit Runge-Kutta) step with Neumann ghost
/// mirroring in each stage. dt = min(dt_max, cfl h^2 min_j H_j^2 / lmax(g^ij)_j),
/// additionally clamped so t never exceeds t_limit. Throws on StepUnderflow.
void step(FlowState& state, const TimeStepPolicy& policy,
          double t_limit = -1.0);

struct RunResult {
    std::vector<Snapshot> trajectory;
    StopReason stop = StopReason::MaxTimeReached;
    FlowState final_state;
};

/// Integrate from u0 until a stop reason fires; snapshots every record_every
/// steps plus the initial and final states.
RunResult run(const GraphFunction& u0, const TimeStepPolicy& policy);

/// T* from the exact exponential area law A(t) = A(0) e^t and the flat-disk
/// limit area (pi for n = 2, 2 for n = 1).
struct SingularTimeEstimate {
    double t_star = 0.0;
    double slope = 0.0;         ///< regression slope of ln A vs t (expect 1)
    double max_residual = 0.0;  ///< max |A e^{-t}/A(0) - 1|
};

struct AreaLawViolated : Error {
    SingularTimeEstimate partial;
    AreaLawViolated(const std::string& what, SingularTimeEstimate p)
        : Error(what), partial(p) {}
};

/// Requires >= 10 samples with area-law residual <= 2 %, else throws
/// AreaLawViolated (carrying the regression anyway).
SingularTimeEstimate extrapolate_singular_time(
    const std::vector<std::pair<double, double>>& area_series, int n);

double flat_limit_area(int n);

}  // namespace imcf
