#pragma once

#include <functional>
#include <vector>

namespace rpcc {

/// Interval with a strict sign change of the scanned function.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

struct RootResult {
    double alpha = 0.0;
    double f_at_root = 0.0;
    int iterations = 0;
    Bracket bracket;
};

struct RootSettings {
    double alpha_min = 1e-3;
    double alpha_max = 8.0;
    int samples = 4096;
    double rel_tol = 1e-13;
    int max_iter = 200;
};

/// Evaluate fn on a uniform grid and return one Bracket per adjacent pair
/// with a strict sign change, in increasing order.  Tangency (touching zero
/// without crossing) is not detected.
std::vector<Bracket> bracket_scan(const std::function<double(double)>& fn,
                                  double lo, double hi, int samples);

/// Bisection to width <= rel_tol * max(1, |alpha|), or |fn| <= 1e-15, or
/// machine resolution of the interval.
RootResult bisect(const std::function<double(double)>& fn, const Bracket& bracket,
                  double rel_tol, int max_iter);

/// All roots of f_of(n, .) on [settings.alpha_min, settings.alpha_max],
/// sorted increasing.  Empty when no sign change exists.
std::vector<RootResult> find_alpha_roots(int n, const RootSettings& settings = {});

}  // namespace rpcc
