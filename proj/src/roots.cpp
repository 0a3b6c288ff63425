#include "rpcc/roots.hpp"

#include <cmath>
#include <string>

#include "rpcc/errors.hpp"
#include "rpcc/reduced.hpp"

namespace rpcc {

std::vector<Bracket> bracket_scan(const std::function<double(double)>& fn,
                                  double lo, double hi, int samples) {
    if (!(lo < hi)) throw DomainError("bracket_scan requires lo < hi");
    if (samples < 2) throw DomainError("bracket_scan requires samples >= 2");

    std::vector<Bracket> out;
    double step = (hi - lo) / static_cast<double>(samples - 1);
    // Carry the last nonzero sample so an exact zero at a grid point between
    // opposite signs still yields its neighbor bracket.  A run of zeros with
    // equal signs on both sides (tangency) stays undetected.
    bool have_ref = false;
    double x_ref = 0.0;
    double f_ref = 0.0;
    for (int i = 0; i < samples; ++i) {
        double x = (i == samples - 1) ? hi : lo + step * static_cast<double>(i);
        double f = fn(x);
        if (!std::isfinite(f)) {
            throw EvaluationError("non-finite function value in bracket_scan", x);
        }
        if (f == 0.0) continue;
        if (have_ref && f_ref * f < 0.0) out.push_back({x_ref, x, f_ref, f});
        have_ref = true;
        x_ref = x;
        f_ref = f;
    }
    return out;
}

RootResult bisect(const std::function<double(double)>& fn, const Bracket& bracket,
                  double rel_tol, int max_iter) {
    if (!(bracket.lo < bracket.hi) || !(bracket.f_lo * bracket.f_hi < 0.0)) {
        throw DomainError("bisect requires a strict sign-change bracket");
    }
    if (!(rel_tol > 0.0)) throw DomainError("bisect requires rel_tol > 0");

    double lo = bracket.lo;
    double hi = bracket.hi;
    double f_lo = bracket.f_lo;
    for (int iter = 1; iter <= max_iter; ++iter) {
        double mid = lo + 0.5 * (hi - lo);
        // Interval narrowed to adjacent doubles: machine resolution reached.
        if (mid <= lo || mid >= hi) {
            return {mid <= lo ? lo : hi, fn(mid <= lo ? lo : hi), iter, bracket};
        }
        double f_mid = fn(mid);
        if (std::abs(f_mid) <= 1e-15 ||
            (hi - lo) <= rel_tol * std::max(1.0, std::abs(mid))) {
            return {mid, f_mid, iter, bracket};
        }
        if (f_lo * f_mid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    throw ConvergenceError("bisect exceeded max_iter", lo + 0.5 * (hi - lo), max_iter);
}

std::vector<RootResult> find_alpha_roots(int n, const RootSettings& settings) {
    if (n < 2) throw DomainError("find_alpha_roots requires n >= 2");
    auto fn = [n](double alpha) { return f_of(n, alpha); };
    auto brackets = bracket_scan(fn, settings.alpha_min, settings.alpha_max, settings.samples);
    std::vector<RootResult> roots;
    roots.reserve(brackets.size());
    for (const auto& b : brackets) {
        roots.push_back(bisect(fn, b, settings.rel_tol, settings.max_iter));
    }
    return roots;
}

}  // namespace rpcc
