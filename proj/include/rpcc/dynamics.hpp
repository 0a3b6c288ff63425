#pragma once

#include <vector>

#include "rpcc/masses.hpp"
#include "rpcc/ode.hpp"
#include "rpcc/vec3.hpp"

namespace rpcc {

/// Free-fall time of r'' = -1/r^2 from rest at r = 1 to r = 0: pi/(2 sqrt 2).
double collapse_time();

struct IntegratorSettings {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double t_end = 2.0;
    double max_step = 0.0;  // 0 means no cap
    double collision_radius = 1e-4;
    int output_samples = 200;
};

struct ScalarSample {
    double time = 0.0;
    double r = 0.0;
    double rdot = 0.0;
};

struct ScalarSolution {
    std::vector<ScalarSample> samples;  // accepted steps plus the stop time
    StopReason reason = StopReason::reached_end;
    double t_stop = 0.0;
    OdeSolution ode;  // dense interpolant on [0, t_stop]

    double r_at(double t) const { return ode.eval(t)[0]; }
};

struct TrajectorySample {
    double time = 0.0;
    std::vector<Vec3> positions;
    std::vector<Vec3> velocities;
    double scale_estimate = 0.0;  // best-fit s with positions ~ s * reference
    double shape_residual = 0.0;  // max_k |Q_k - s c_k|
};

struct NbodyResult {
    std::vector<TrajectorySample> samples;  // uniform grid on [0, t_stop]
    StopReason reason = StopReason::reached_end;
    double t_stop = 0.0;
    OdeSolution ode;
    std::vector<Vec3> reference;  // the shape c_k the scale is fit against
};

struct PerverseMotionReport {
    double max_deviation = 0.0;        // sup_t max_k |Q_k(mass_a) - Q_k(mass_b)|
    double max_shape_residual_a = 0.0;
    double max_shape_residual_b = 0.0;
    double max_scalar_mismatch = 0.0;  // sup over both runs of max_k |Q_k - r(t) c_k|
    double t_common = 0.0;
    StopReason reason_a = StopReason::reached_end;
    StopReason reason_b = StopReason::reached_end;
};

/// Integrate r'' = -1/r^2 from (r0, v0); stops early once r <= collision_radius.
ScalarSolution scalar_homographic(double r0, double v0, const IntegratorSettings& settings);

/// Integrate the full N-body system with verify's force evaluator; the scale
/// estimate is fit against the initial shape, and the run stops once it
/// drops to collision_radius.
NbodyResult nbody_integrate(const std::vector<Vec3>& points0,
                            const std::vector<Vec3>& velocities0,
                            const std::vector<double>& body_masses,
                            const IntegratorSettings& settings);

/// Per-sample data behind a PerverseMotionReport, for trajectory export.
struct PerverseMotionDetail {
    PerverseMotionReport report;
    std::vector<double> grid;  // shared sample times on [0, t_common]
    std::vector<std::vector<Vec3>> positions_a;  // [time][body]
    std::vector<std::vector<Vec3>> positions_b;
    std::vector<double> shape_residual_a;  // per time
    std::vector<double> shape_residual_b;
    std::vector<double> deviation;  // per time, max over bodies
    std::vector<double> scalar_r;   // r(t) from the scalar collapse law
};

/// Release the certified configuration from rest at unit scale under both
/// mass vectors and compare the two motions (and the scalar collapse law)
/// on a shared uniform grid.
PerverseMotionReport perverse_motion_check(const Certificate& cert,
                                           const IntegratorSettings& settings);

PerverseMotionDetail perverse_motion_detail(const Certificate& cert,
                                            const IntegratorSettings& settings);

}  // namespace rpcc
