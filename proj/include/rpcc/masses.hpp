#pragma once

#include <optional>
#include <string>
#include <utility>

#include "rpcc/geometry.hpp"
#include "rpcc/roots.hpp"

namespace rpcc {

/// Which root of f_n the certificate is built on, relative to alpha = 1.
enum class Branch { lower, upper };

const char* branch_name(Branch branch);
std::optional<Branch> branch_from_name(const std::string& name);

/// Open range of the free parameter t = m2 on which all three masses of the
/// affine family are strictly positive.
struct PositivityInterval {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double width() const { return t_hi - t_lo; }
};

/// Constructive witness: one root of f_n with its compatibility mass M and
/// two distinct admissible mass triples sharing that total mass.
struct Certificate {
    int n = 0;
    int big_n = 0;  // n + 3
    Branch branch = Branch::lower;
    double alpha = 0.0;
    double h_n = 0.0;
    double total_mass = 0.0;
    PositivityInterval interval;
    MassTriple mass_a;
    MassTriple mass_b;
    double residual_a_of_mass_a = 0.0;
    double residual_b_of_mass_a = 0.0;
    double residual_a_of_mass_b = 0.0;
    double residual_b_of_mass_b = 0.0;
    RootSettings settings;
    std::string tool_version;
};

/// Row one of the eliminated system solved for m1 at m2 = t:
/// m1 = [1 - M - (radial_factor(alpha) - 2) t] / (H_n - n).
double m1_of(int n, double alpha, double M, double t);

/// Family member (m0, m1, t) with m0 = M - n m1 - 2t; satisfies the total
/// mass and row one exactly, and both reduced equations at a compatible root.
MassTriple build_family_member(int n, double alpha, double M, double t);

/// Intersection of the half-lines m0(t) > 0, m1(t) > 0, t > 0, computed from
/// the affine coefficients.  Absent when empty.  Requires f(n, alpha) ~ 0.
std::optional<PositivityInterval> positivity_interval(int n, double alpha, double M,
                                                      double f_tolerance = 1e-9);

/// Deterministic interior parameters at the interval thirds.
std::pair<double, double> canonical_pair(const PositivityInterval& interval);

/// Full pipeline: root on the requested branch, compatibility mass,
/// positivity interval, canonical pair, assembled certificate.
/// Throws NoRootError / EmptyPositivityError / SingularSystemError per stage.
Certificate construct_certificate(int n, Branch branch, const RootSettings& settings = {});

}  // namespace rpcc
