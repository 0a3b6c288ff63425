#include "rpcc/reduced.hpp"

#include <cmath>
#include <string>

#include "rpcc/errors.hpp"

namespace rpcc {

namespace {

constexpr double kDegenerateDenominator = 1e-13;

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("alpha must be finite and > 0");
    }
}

void check_n(int n) {
    if (n < 2) {
        throw DomainError("n must be >= 2, got n = " + std::to_string(n));
    }
}

}  // namespace

double radial_factor(double alpha) {
    check_alpha(alpha);
    return 2.0 / std::pow(1.0 + alpha * alpha, 1.5);
}

double axial_factor(double alpha) {
    check_alpha(alpha);
    return alpha * alpha * alpha / std::pow(1.0 + alpha * alpha, 1.5);
}

double residual_A(int n, double alpha, const MassTriple& masses) {
    check_n(n);
    return masses.m0 + masses.m1 * h_sum(n) + masses.m2 * radial_factor(alpha) - 1.0;
}

double residual_B(int n, double alpha, const MassTriple& masses) {
    check_n(n);
    return masses.m0 + static_cast<double>(n) * masses.m1 * axial_factor(alpha) +
           masses.m2 / 4.0 - alpha * alpha * alpha;
}

double total_mass_of(int n, const MassTriple& masses) {
    check_n(n);
    return masses.m0 + static_cast<double>(n) * masses.m1 + 2.0 * masses.m2;
}

double g_of(double alpha) {
    return (2.0 - radial_factor(alpha)) * (1.0 - axial_factor(alpha));
}

double level_of(int n) {
    return -(7.0 / 4.0) * (h_sum(n) / static_cast<double>(n) - 1.0);
}

double f_of(int n, double alpha) {
    // Written as the determinant expansion, not as level - g, so the
    // identity f = level - g stays a nontrivial cross-check.
    return (h_sum(n) / static_cast<double>(n) - 1.0) * (-7.0 / 4.0) -
           (radial_factor(alpha) - 2.0) * (axial_factor(alpha) - 1.0);
}

double kappa_of(int n, double alpha) {
    check_n(n);
    double denom = h_sum(n) / static_cast<double>(n) - 1.0;
    if (std::abs(denom) <= kDegenerateDenominator) {
        throw SingularSystemError("kappa undefined: H_n/n - 1 is degenerate at n = " +
                                  std::to_string(n));
    }
    return (axial_factor(alpha) - 1.0) / denom;
}

double admissible_total_mass(int n, double alpha, double f_tolerance) {
    double f = f_of(n, alpha);
    if (std::abs(f) > f_tolerance) {
        throw DomainError("admissible_total_mass requires f(n, alpha) ~ 0; got |f| = " +
                          std::to_string(std::abs(f)));
    }
    double kappa = kappa_of(n, alpha);
    if (std::abs(1.0 - kappa) <= kDegenerateDenominator) {
        throw SingularSystemError("no finite compatibility mass: kappa ~ 1");
    }
    return (alpha * alpha * alpha - kappa) / (1.0 - kappa);
}

ReducedReport reduced_report(int n, double alpha) {
    check_n(n);
    check_alpha(alpha);
    ReducedReport report;
    report.n = n;
    report.alpha = alpha;
    report.h_n = h_sum(n);
    report.level = level_of(n);
    report.g_value = g_of(alpha);
    report.f_value = f_of(n, alpha);
    report.kappa = kappa_of(n, alpha);
    if (std::abs(1.0 - report.kappa) > kDegenerateDenominator) {
        report.total_mass = (alpha * alpha * alpha - report.kappa) / (1.0 - report.kappa);
    }
    return report;
}

}  // namespace rpcc
