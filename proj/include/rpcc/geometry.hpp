#pragma once

#include <vector>

#include "rpcc/vec3.hpp"

namespace rpcc {

struct MassTriple {
    double m0 = 0.0;  // center mass
    double m1 = 0.0;  // mass of each ring body
    double m2 = 0.0;  // mass of each pole body

    bool admissible() const { return m0 > 0.0 && m1 > 0.0 && m2 > 0.0; }
};

/// Symmetric configuration: n ring bodies on the unit circle, a center body,
/// and two poles at height +-alpha on the axis.  Total body count N = n + 3.
struct SymmetricConfig {
    int n = 0;
    double alpha = 0.0;

    int body_count() const { return n + 3; }
};

/// Body ordering used by every module and file format:
///   index 0        center body
///   indices 1..n   ring bodies at angles 2*pi*k/n, increasing k
///   index n+1      north pole (0, 0, +alpha)
///   index n+2      south pole (0, 0, -alpha)
namespace body_index {
inline constexpr int kCenter = 0;
inline int ring(int k) { return k; }          // k in 1..n
inline int north(int n) { return n + 1; }
inline int south(int n) { return n + 2; }
}  // namespace body_index

/// Positions of all N bodies at unit scale, in BodyIndexing order.
std::vector<Vec3> build_points(const SymmetricConfig& config);

/// H_n = sum_{j=1}^{n-1} 1/(4 sin(pi j / n)), compensated summation.
double h_sum(int n);

/// Per-body masses in BodyIndexing order: [m0, m1 x n, m2, m2].
std::vector<double> mass_vector(int n, const MassTriple& masses);

}  // namespace rpcc
