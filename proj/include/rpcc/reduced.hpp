#pragma once

#include <optional>

#include "rpcc/geometry.hpp"

namespace rpcc {

/// Snapshot of the reduced central-configuration system at one (n, alpha).
struct ReducedReport {
    int n = 0;
    double alpha = 0.0;
    double h_n = 0.0;
    double level = 0.0;    // -(7/4)(H_n/n - 1)
    double g_value = 0.0;  // (2 - radial)(1 - axial)
    double f_value = 0.0;  // determinant of the eliminated 2x2 system
    double kappa = 0.0;    // row-proportionality factor
    std::optional<double> total_mass;  // defined only when kappa != 1
};

/// Coefficient of m2 in the radial equation: 2/(1+alpha^2)^{3/2}, in (0, 2).
double radial_factor(double alpha);

/// Coefficient factor in the axial equation: alpha^3/(1+alpha^2)^{3/2}, in (0, 1).
double axial_factor(double alpha);

/// m0 + m1*H_n + m2*radial_factor(alpha) - 1.  Zero iff the radial equation holds.
double residual_A(int n, double alpha, const MassTriple& masses);

/// m0 + n*m1*axial_factor(alpha) + m2/4 - alpha^3.  Zero iff the axial equation holds.
double residual_B(int n, double alpha, const MassTriple& masses);

/// Total mass M = m0 + n*m1 + 2*m2.
double total_mass_of(int n, const MassTriple& masses);

/// g(alpha) = (2 - radial_factor)(1 - axial_factor); nonnegative, maximum
/// 9/4 - sqrt(2) at alpha = 1.
double g_of(double alpha);

/// -(7/4)(H_n/n - 1); strictly decreasing in n.
double level_of(int n);

/// Determinant of the eliminated 2x2 coefficient matrix,
/// (H_n/n - 1)(-7/4) - (radial - 2)(axial - 1); identically level - g.
double f_of(int n, double alpha);

/// Row-proportionality factor kappa = (axial_factor - 1)/(H_n/n - 1).
/// At a root of f it also equals -(7/4)/(radial_factor - 2).
double kappa_of(int n, double alpha);

/// Total mass M = (alpha^3 - kappa)/(1 - kappa) making the two eliminated
/// equations scalar multiples of each other.  Requires f near zero.
double admissible_total_mass(int n, double alpha, double f_tolerance = 1e-9);

/// Evaluate everything the reduced system knows at one point.
ReducedReport reduced_report(int n, double alpha);

}  // namespace rpcc
