#include "rpcc/geometry.hpp"

#include <cmath>
#include <string>

#include "rpcc/errors.hpp"
#include "rpcc/numerics.hpp"

namespace rpcc {

namespace {

void check_config(const SymmetricConfig& config) {
    if (config.n < 2) {
        throw DomainError("symmetric configuration requires n >= 2, got n = " +
                          std::to_string(config.n));
    }
    if (!(config.alpha > 0.0) || !std::isfinite(config.alpha)) {
        throw DomainError("symmetric configuration requires finite alpha > 0");
    }
}

}  // namespace

std::vector<Vec3> build_points(const SymmetricConfig& config) {
    check_config(config);
    const int n = config.n;
    std::vector<Vec3> points(static_cast<std::size_t>(n) + 3);
    points[0] = {0.0, 0.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        // Each angle from scratch, not incremental rotation, so there is no
        // accumulated phase drift for large n.
        double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        points[static_cast<std::size_t>(k)] = {std::cos(theta), std::sin(theta), 0.0};
    }
    points[static_cast<std::size_t>(n) + 1] = {0.0, 0.0, config.alpha};
    points[static_cast<std::size_t>(n) + 2] = {0.0, 0.0, -config.alpha};
    return points;
}

double h_sum(int n) {
    if (n < 2) {
        throw DomainError("h_sum requires n >= 2, got n = " + std::to_string(n));
    }
    // Terms at j near 0 and near n are O(n); naive order loses digits there.
    CompensatedSum acc;
    for (int j = 1; j < n; ++j) {
        acc.add(1.0 / (4.0 * std::sin(kPi * static_cast<double>(j) / static_cast<double>(n))));
    }
    return acc.value();
}

std::vector<double> mass_vector(int n, const MassTriple& masses) {
    if (n < 2) {
        throw DomainError("mass_vector requires n >= 2, got n = " + std::to_string(n));
    }
    std::vector<double> out(static_cast<std::size_t>(n) + 3, masses.m1);
    out[0] = masses.m0;
    out[static_cast<std::size_t>(n) + 1] = masses.m2;
    out[static_cast<std::size_t>(n) + 2] = masses.m2;
    return out;
}

}  // namespace rpcc
