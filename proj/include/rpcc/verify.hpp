#pragma once

#include <vector>

#include "rpcc/masses.hpp"
#include "rpcc/vec3.hpp"

namespace rpcc {

/// Oracle results for one mass vector on the embedded configuration.
struct MassVectorCheck {
    double fitted_lambda = 0.0;
    double max_body_residual = 0.0;  // sup_k |A_k - lambda c_k|
    double center_of_mass_norm = 0.0;
    double total = 0.0;
};

struct VerificationReport {
    MassVectorCheck a;
    MassVectorCheck b;
    bool totals_equal = false;
    bool masses_distinct = false;
    bool passed = false;
    double tolerance_used = 0.0;
};

/// Direct Newtonian accelerations A_k = -sum_{j != k} M_j (Q_k - Q_j)/|Q_k - Q_j|^3.
/// O(N^2) pairwise summation, compensated per component, fixed index order.
std::vector<Vec3> accelerations(const std::vector<Vec3>& points,
                                const std::vector<double>& body_masses);

/// Least-squares lambda in A_k ~ lambda c_k, weighting by mass:
/// lambda = sum_k M_k <A_k, c_k> / sum_k M_k |c_k|^2, skipping |c_k| < 1e-12.
double fit_lambda(const std::vector<Vec3>& points, const std::vector<double>& body_masses,
                  const std::vector<Vec3>& accels);

Vec3 center_of_mass(const std::vector<Vec3>& points, const std::vector<double>& body_masses);

/// Brute-force certificate check straight from the definition: embeds the
/// configuration, evaluates full accelerations for both mass vectors, fits
/// lambda, and checks residuals, totals, distinctness, and centers of mass.
/// Never consults the reduced-system formulas.
VerificationReport verify_certificate(const Certificate& cert, double tol = 1e-10);

}  // namespace rpcc
