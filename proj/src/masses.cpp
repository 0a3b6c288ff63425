#include "rpcc/masses.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rpcc/errors.hpp"
#include "rpcc/reduced.hpp"
#include "rpcc/version.hpp"

namespace rpcc {

const char* branch_name(Branch branch) {
    return branch == Branch::lower ? "lower" : "upper";
}

std::optional<Branch> branch_from_name(const std::string& name) {
    if (name == "lower") return Branch::lower;
    if (name == "upper") return Branch::upper;
    return std::nullopt;
}

namespace {

double family_denominator(int n) {
    double denom = h_sum(n) - static_cast<double>(n);
    if (std::abs(denom) <= 1e-10) {
        throw SingularSystemError("mass family undefined: H_n - n degenerate at n = " +
                                  std::to_string(n));
    }
    return denom;
}

// One affine constraint c + d t > 0 intersected into [lo, hi].
void clip_half_line(double c, double d, double& lo, double& hi) {
    if (d > 0.0) {
        lo = std::max(lo, -c / d);
    } else if (d < 0.0) {
        hi = std::min(hi, -c / d);
    } else if (c <= 0.0) {
        lo = std::numeric_limits<double>::infinity();
        hi = -std::numeric_limits<double>::infinity();
    }
}

}  // namespace

double m1_of(int n, double alpha, double M, double t) {
    double denom = family_denominator(n);
    return (1.0 - M - (radial_factor(alpha) - 2.0) * t) / denom;
}

MassTriple build_family_member(int n, double alpha, double M, double t) {
    double m1 = m1_of(n, alpha, M, t);
    double m0 = M - static_cast<double>(n) * m1 - 2.0 * t;
    return {m0, m1, t};
}

std::optional<PositivityInterval> positivity_interval(int n, double alpha, double M,
                                                      double f_tolerance) {
    double f = f_of(n, alpha);
    if (std::abs(f) > f_tolerance) {
        throw DomainError("positivity_interval requires f(n, alpha) ~ 0; got |f| = " +
                          std::to_string(std::abs(f)));
    }
    double denom = family_denominator(n);
    // m1(t) = c1 + d1 t, m0(t) = c0 + d0 t as affine functions of t = m2.
    double c1 = (1.0 - M) / denom;
    double d1 = (2.0 - radial_factor(alpha)) / denom;
    double c0 = M - static_cast<double>(n) * c1;
    double d0 = -static_cast<double>(n) * d1 - 2.0;

    double lo = 0.0;  // the t > 0 constraint
    double hi = std::numeric_limits<double>::infinity();
    clip_half_line(c1, d1, lo, hi);
    clip_half_line(c0, d0, lo, hi);
    if (!(lo < hi)) return std::nullopt;
    return PositivityInterval{lo, hi};
}

std::pair<double, double> canonical_pair(const PositivityInterval& interval) {
    if (!(interval.t_lo < interval.t_hi)) {
        throw DomainError("canonical_pair requires a nonempty interval");
    }
    double third = (interval.t_hi - interval.t_lo) / 3.0;
    return {interval.t_lo + third, interval.t_lo + 2.0 * third};
}

Certificate construct_certificate(int n, Branch branch, const RootSettings& settings) {
    auto roots = find_alpha_roots(n, settings);
    const RootResult* chosen = nullptr;
    for (const auto& r : roots) {
        bool on_branch = (branch == Branch::lower) ? (r.alpha < 1.0) : (r.alpha > 1.0);
        if (on_branch) {
            chosen = &r;
            break;
        }
    }
    if (chosen == nullptr) {
        throw NoRootError("no root of f on the " + std::string(branch_name(branch)) +
                          " branch for n = " + std::to_string(n));
    }

    double alpha = chosen->alpha;
    double M = admissible_total_mass(n, alpha);

    auto interval = positivity_interval(n, alpha, M);
    if (!interval) {
        throw EmptyPositivityError("empty positivity interval on the " +
                                   std::string(branch_name(branch)) +
                                   " branch for n = " + std::to_string(n));
    }

    auto [t_a, t_b] = canonical_pair(*interval);
    Certificate cert;
    cert.n = n;
    cert.big_n = n + 3;
    cert.branch = branch;
    cert.alpha = alpha;
    cert.h_n = h_sum(n);
    cert.total_mass = M;
    cert.interval = *interval;
    cert.mass_a = build_family_member(n, alpha, M, t_a);
    cert.mass_b = build_family_member(n, alpha, M, t_b);
    cert.residual_a_of_mass_a = residual_A(n, alpha, cert.mass_a);
    cert.residual_b_of_mass_a = residual_B(n, alpha, cert.mass_a);
    cert.residual_a_of_mass_b = residual_A(n, alpha, cert.mass_b);
    cert.residual_b_of_mass_b = residual_B(n, alpha, cert.mass_b);
    cert.settings = settings;
    cert.tool_version = kToolVersion;

    // Interior points must clear the margin; sign noise at the endpoints
    // cannot reach here unless the interval itself is degenerate.
    double margin = 1e-13 * M;
    for (const MassTriple* mt : {&cert.mass_a, &cert.mass_b}) {
        if (!(mt->m0 > margin && mt->m1 > margin && mt->m2 > margin)) {
            throw EmptyPositivityError("canonical family member not strictly positive for n = " +
                                       std::to_string(n));
        }
    }
    return cert;
}

}  // namespace rpcc
