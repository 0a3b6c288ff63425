#include "rpcc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rpcc/errors.hpp"
#include "rpcc/numerics.hpp"

namespace rpcc {

namespace {

constexpr double kMinSeparation = 1e-9;
constexpr double kFitExclusionRadius = 1e-12;
constexpr double kDistinctnessFloor = 1e-6;

double rel_sup_distance(const MassTriple& a, const MassTriple& b) {
    double num = std::max({std::abs(a.m0 - b.m0), std::abs(a.m1 - b.m1),
                           std::abs(a.m2 - b.m2)});
    double den = std::max({std::abs(a.m0), std::abs(a.m1), std::abs(a.m2),
                           std::abs(b.m0), std::abs(b.m1), std::abs(b.m2)});
    return den == 0.0 ? 0.0 : num / den;
}

}  // namespace

std::vector<Vec3> accelerations(const std::vector<Vec3>& points,
                                const std::vector<double>& body_masses) {
    std::size_t count = points.size();
    if (count < 2 || body_masses.size() != count) {
        throw DomainError("accelerations requires equal-length inputs with >= 2 bodies");
    }
    std::vector<Vec3> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        CompensatedSum ax, ay, az;
        for (std::size_t j = 0; j < count; ++j) {
            if (j == k) continue;
            Vec3 d = points[k] - points[j];
            double r = norm(d);
            if (r < kMinSeparation) {
                throw CollisionError("bodies closer than minimum separation",
                                     static_cast<int>(std::min(j, k)),
                                     static_cast<int>(std::max(j, k)));
            }
            double w = -body_masses[j] / (r * r * r);
            ax.add(w * d.x);
            ay.add(w * d.y);
            az.add(w * d.z);
        }
        out[k] = {ax.value(), ay.value(), az.value()};
    }
    return out;
}

double fit_lambda(const std::vector<Vec3>& points, const std::vector<double>& body_masses,
                  const std::vector<Vec3>& accels) {
    if (points.size() != body_masses.size() || points.size() != accels.size()) {
        throw DomainError("fit_lambda requires equal-length inputs");
    }
    CompensatedSum numerator, denominator;
    bool any = false;
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (norm(points[k]) < kFitExclusionRadius) continue;
        any = true;
        numerator.add(body_masses[k] * dot(accels[k], points[k]));
        denominator.add(body_masses[k] * dot(points[k], points[k]));
    }
    if (!any || denominator.value() == 0.0) {
        throw DegenerateError("fit_lambda: no body usable for the fit");
    }
    return numerator.value() / denominator.value();
}

Vec3 center_of_mass(const std::vector<Vec3>& points, const std::vector<double>& body_masses) {
    if (points.size() != body_masses.size() || points.empty()) {
        throw DomainError("center_of_mass requires equal-length nonempty inputs");
    }
    CompensatedSum cx, cy, cz, total;
    for (std::size_t k = 0; k < points.size(); ++k) {
        cx.add(body_masses[k] * points[k].x);
        cy.add(body_masses[k] * points[k].y);
        cz.add(body_masses[k] * points[k].z);
        total.add(body_masses[k]);
    }
    double m = total.value();
    if (!(m > 0.0)) throw DegenerateError("center_of_mass: total mass must be positive");
    return {cx.value() / m, cy.value() / m, cz.value() / m};
}

namespace {

MassVectorCheck check_one_mass_vector(const std::vector<Vec3>& points, int n,
                                      const MassTriple& masses) {
    auto mv = mass_vector(n, masses);
    auto accel = accelerations(points, mv);
    double lambda = fit_lambda(points, mv, accel);

    double max_residual = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        max_residual = std::max(max_residual, norm(accel[k] - lambda * points[k]));
    }

    CompensatedSum total;
    for (double m : mv) total.add(m);

    MassVectorCheck check;
    check.fitted_lambda = lambda;
    check.max_body_residual = max_residual;
    check.center_of_mass_norm = norm(center_of_mass(points, mv));
    check.total = total.value();
    return check;
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert, double tol) {
    if (cert.n < 2 || cert.big_n != cert.n + 3) {
        throw DomainError("verify_certificate: inconsistent body counts");
    }
    if (!(cert.alpha > 0.0) || !std::isfinite(cert.alpha)) {
        throw DomainError("verify_certificate: alpha must be finite and positive");
    }
    for (double m : {cert.mass_a.m0, cert.mass_a.m1, cert.mass_a.m2,
                     cert.mass_b.m0, cert.mass_b.m1, cert.mass_b.m2}) {
        if (!std::isfinite(m)) throw DomainError("verify_certificate: non-finite mass");
    }

    auto points = build_points({cert.n, cert.alpha});

    VerificationReport report;
    report.tolerance_used = tol;
    report.a = check_one_mass_vector(points, cert.n, cert.mass_a);
    report.b = check_one_mass_vector(points, cert.n, cert.mass_b);
    report.totals_equal = std::abs(report.a.total - report.b.total) <=
                          tol * std::max(std::abs(report.a.total), std::abs(report.b.total));
    report.masses_distinct = rel_sup_distance(cert.mass_a, cert.mass_b) > kDistinctnessFloor;
    report.passed = report.a.max_body_residual <= tol && report.b.max_body_residual <= tol &&
                    report.a.center_of_mass_norm <= tol &&
                    report.b.center_of_mass_norm <= tol && report.totals_equal &&
                    report.masses_distinct;
    return report;
}

}  // namespace rpcc
