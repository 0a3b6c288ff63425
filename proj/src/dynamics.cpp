#include "rpcc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rpcc/errors.hpp"
#include "rpcc/numerics.hpp"
#include "rpcc/verify.hpp"

namespace rpcc {

double collapse_time() { return kPi / (2.0 * std::sqrt(2.0)); }

namespace {

void check_settings(const IntegratorSettings& s) {
    if (!(s.rel_tol >= 1e-14)) throw DomainError("rel_tol must be >= 1e-14");
    if (!(s.abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
    if (!(s.t_end > 0.0)) throw DomainError("t_end must be positive");
    if (s.max_step < 0.0) throw DomainError("max_step must be nonnegative");
    if (!(s.collision_radius > 0.0)) throw DomainError("collision_radius must be positive");
    if (s.output_samples < 2) throw DomainError("output_samples must be >= 2");
}

OdeSettings to_ode_settings(const IntegratorSettings& s) {
    OdeSettings out;
    out.rel_tol = s.rel_tol;
    out.abs_tol = s.abs_tol;
    out.max_step = s.max_step;
    return out;
}

// State layout: 3N positions followed by 3N velocities.
std::vector<double> pack_state(const std::vector<Vec3>& pos, const std::vector<Vec3>& vel) {
    std::size_t count = pos.size();
    std::vector<double> y(6 * count);
    for (std::size_t k = 0; k < count; ++k) {
        y[3 * k] = pos[k].x;
        y[3 * k + 1] = pos[k].y;
        y[3 * k + 2] = pos[k].z;
        y[3 * (count + k)] = vel[k].x;
        y[3 * (count + k) + 1] = vel[k].y;
        y[3 * (count + k) + 2] = vel[k].z;
    }
    return y;
}

std::vector<Vec3> unpack_positions(const std::vector<double>& y, std::size_t count) {
    std::vector<Vec3> pos(count);
    for (std::size_t k = 0; k < count; ++k) {
        pos[k] = {y[3 * k], y[3 * k + 1], y[3 * k + 2]};
    }
    return pos;
}

std::vector<Vec3> unpack_velocities(const std::vector<double>& y, std::size_t count) {
    std::vector<Vec3> vel(count);
    for (std::size_t k = 0; k < count; ++k) {
        vel[k] = {y[3 * (count + k)], y[3 * (count + k) + 1], y[3 * (count + k) + 2]};
    }
    return vel;
}

double scale_against(const std::vector<Vec3>& positions, const std::vector<Vec3>& reference,
                     double reference_norm2) {
    CompensatedSum num;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        num.add(dot(positions[k], reference[k]));
    }
    return num.value() / reference_norm2;
}

double shape_residual_of(const std::vector<Vec3>& positions,
                         const std::vector<Vec3>& reference, double scale) {
    double worst = 0.0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        worst = std::max(worst, norm(positions[k] - scale * reference[k]));
    }
    return worst;
}

}  // namespace

ScalarSolution scalar_homographic(double r0, double v0, const IntegratorSettings& settings) {
    check_settings(settings);
    if (!(r0 > 0.0)) throw DomainError("scalar_homographic requires r0 > 0");

    auto rhs = [](double, const std::vector<double>& y, std::vector<double>& dydt) {
        dydt[0] = y[1];
        dydt[1] = -1.0 / (y[0] * y[0]);
    };
    auto event = [&settings](double, const std::vector<double>& y) {
        return y[0] - settings.collision_radius;
    };

    ScalarSolution sol;
    sol.ode = integrate_dopri5(rhs, 0.0, {r0, v0}, settings.t_end, to_ode_settings(settings),
                               event);
    sol.reason = sol.ode.reason();
    sol.t_stop = sol.ode.t_final();
    sol.samples.reserve(sol.ode.times().size());
    for (std::size_t i = 0; i < sol.ode.times().size(); ++i) {
        sol.samples.push_back({sol.ode.times()[i], sol.ode.states()[i][0],
                               sol.ode.states()[i][1]});
    }
    return sol;
}

NbodyResult nbody_integrate(const std::vector<Vec3>& points0,
                            const std::vector<Vec3>& velocities0,
                            const std::vector<double>& body_masses,
                            const IntegratorSettings& settings) {
    check_settings(settings);
    std::size_t count = points0.size();
    if (count < 2 || velocities0.size() != count || body_masses.size() != count) {
        throw DomainError("nbody_integrate requires equal-length inputs with >= 2 bodies");
    }

    double reference_norm2 = 0.0;
    for (const auto& p : points0) reference_norm2 += dot(p, p);
    if (!(reference_norm2 > 0.0)) {
        throw DegenerateError("nbody_integrate: all reference points at the origin");
    }

    auto rhs = [&body_masses, count](double, const std::vector<double>& y,
                                     std::vector<double>& dydt) {
        auto pos = unpack_positions(y, count);
        auto acc = accelerations(pos, body_masses);
        for (std::size_t k = 0; k < count; ++k) {
            dydt[3 * k] = y[3 * (count + k)];
            dydt[3 * k + 1] = y[3 * (count + k) + 1];
            dydt[3 * k + 2] = y[3 * (count + k) + 2];
            dydt[3 * (count + k)] = acc[k].x;
            dydt[3 * (count + k) + 1] = acc[k].y;
            dydt[3 * (count + k) + 2] = acc[k].z;
        }
    };
    auto event = [&points0, reference_norm2, count, &settings](double,
                                                               const std::vector<double>& y) {
        auto pos = unpack_positions(y, count);
        return scale_against(pos, points0, reference_norm2) - settings.collision_radius;
    };

    NbodyResult result;
    result.reference = points0;
    result.ode = integrate_dopri5(rhs, 0.0, pack_state(points0, velocities0), settings.t_end,
                                  to_ode_settings(settings), event);
    result.reason = result.ode.reason();
    result.t_stop = result.ode.t_final();

    result.samples.reserve(static_cast<std::size_t>(settings.output_samples));
    for (int i = 0; i < settings.output_samples; ++i) {
        double t = result.t_stop * static_cast<double>(i) /
                   static_cast<double>(settings.output_samples - 1);
        auto y = result.ode.eval(t);
        TrajectorySample sample;
        sample.time = t;
        sample.positions = unpack_positions(y, count);
        sample.velocities = unpack_velocities(y, count);
        sample.scale_estimate = scale_against(sample.positions, points0, reference_norm2);
        sample.shape_residual =
            shape_residual_of(sample.positions, points0, sample.scale_estimate);
        result.samples.push_back(std::move(sample));
    }
    return result;
}

PerverseMotionReport perverse_motion_check(const Certificate& cert,
                                           const IntegratorSettings& settings) {
    return perverse_motion_detail(cert, settings).report;
}

PerverseMotionDetail perverse_motion_detail(const Certificate& cert,
                                            const IntegratorSettings& settings) {
    check_settings(settings);
    if (cert.n < 2 || cert.big_n != cert.n + 3 || !(cert.alpha > 0.0) ||
        !std::isfinite(cert.alpha)) {
        throw DomainError("perverse_motion_check: structurally invalid certificate");
    }

    auto points = build_points({cert.n, cert.alpha});
    std::vector<Vec3> rest(points.size(), Vec3{0.0, 0.0, 0.0});

    auto run_a = nbody_integrate(points, rest, mass_vector(cert.n, cert.mass_a), settings);
    auto run_b = nbody_integrate(points, rest, mass_vector(cert.n, cert.mass_b), settings);
    auto scalar = scalar_homographic(1.0, 0.0, settings);

    double reference_norm2 = 0.0;
    for (const auto& p : points) reference_norm2 += dot(p, p);

    PerverseMotionDetail detail;
    PerverseMotionReport& report = detail.report;
    report.reason_a = run_a.reason;
    report.reason_b = run_b.reason;
    report.t_common = std::min({run_a.t_stop, run_b.t_stop, scalar.t_stop});

    for (int i = 0; i < settings.output_samples; ++i) {
        double t = report.t_common * static_cast<double>(i) /
                   static_cast<double>(settings.output_samples - 1);
        auto pos_a = unpack_positions(run_a.ode.eval(t), points.size());
        auto pos_b = unpack_positions(run_b.ode.eval(t), points.size());
        double r = scalar.r_at(t);

        double deviation = 0.0;
        for (std::size_t k = 0; k < points.size(); ++k) {
            deviation = std::max(deviation, norm(pos_a[k] - pos_b[k]));
            report.max_scalar_mismatch =
                std::max({report.max_scalar_mismatch, norm(pos_a[k] - r * points[k]),
                          norm(pos_b[k] - r * points[k])});
        }
        report.max_deviation = std::max(report.max_deviation, deviation);
        double s_a = scale_against(pos_a, points, reference_norm2);
        double s_b = scale_against(pos_b, points, reference_norm2);
        double shape_a = shape_residual_of(pos_a, points, s_a);
        double shape_b = shape_residual_of(pos_b, points, s_b);
        report.max_shape_residual_a = std::max(report.max_shape_residual_a, shape_a);
        report.max_shape_residual_b = std::max(report.max_shape_residual_b, shape_b);

        detail.grid.push_back(t);
        detail.positions_a.push_back(std::move(pos_a));
        detail.positions_b.push_back(std::move(pos_b));
        detail.shape_residual_a.push_back(shape_a);
        detail.shape_residual_b.push_back(shape_b);
        detail.deviation.push_back(deviation);
        detail.scalar_r.push_back(r);
    }
    return detail;
}

}  // namespace rpcc
