#include "rpcc/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rpcc/errors.hpp"

namespace rpcc {

const char* stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::reached_end: return "reached_end";
        case StopReason::collision: return "collision";
        case StopReason::step_underflow: return "step_underflow";
    }
    return "unknown";
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0;
constexpr double a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0;
constexpr double a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0;
constexpr double a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
// Error coefficients (order-5 minus order-4 solution).
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0;
constexpr double e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Dense-output coefficients.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

double initial_step_guess(const OdeRhs& rhs, double t0, const std::vector<double>& y0,
                          const std::vector<double>& f0, double t_end,
                          const OdeSettings& settings) {
    std::size_t dim = y0.size();
    double d0 = 0.0, d1n = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        double sc = settings.abs_tol + settings.rel_tol * std::abs(y0[i]);
        d0 += (y0[i] / sc) * (y0[i] / sc);
        d1n += (f0[i] / sc) * (f0[i] / sc);
    }
    d0 = std::sqrt(d0 / static_cast<double>(dim));
    d1n = std::sqrt(d1n / static_cast<double>(dim));
    double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * d0 / d1n;
    h0 = std::min(h0, t_end - t0);

    std::vector<double> y1(dim), f1(dim);
    for (std::size_t i = 0; i < dim; ++i) y1[i] = y0[i] + h0 * f0[i];
    rhs(t0 + h0, y1, f1);
    double d2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        double sc = settings.abs_tol + settings.rel_tol * std::abs(y0[i]);
        double df = (f1[i] - f0[i]) / sc;
        d2 += df * df;
    }
    d2 = std::sqrt(d2 / static_cast<double>(dim)) / h0;

    double h1;
    if (std::max(d1n, d2) <= 1e-15) {
        h1 = std::max(1e-6, h0 * 1e-3);
    } else {
        h1 = std::pow(0.01 / std::max(d1n, d2), 0.2);
    }
    double h = std::min({100.0 * h0, h1, t_end - t0});
    if (settings.max_step > 0.0) h = std::min(h, settings.max_step);
    return h;
}

}  // namespace

std::vector<double> OdeSolution::eval_segment(const Segment& seg, double t) const {
    double theta = (t - seg.t0) / seg.h;
    double omt = 1.0 - theta;
    std::size_t dim = seg.r1.size();
    std::vector<double> y(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        y[i] = seg.r1[i] +
               theta * (seg.r2[i] + omt * (seg.r3[i] + theta * (seg.r4[i] + omt * seg.r5[i])));
    }
    return y;
}

std::vector<double> OdeSolution::eval(double t) const {
    if (times_.empty()) throw DomainError("eval on an empty solution");
    if (t < times_.front() - 1e-12 || t > times_.back() + 1e-12) {
        throw DomainError("eval outside the integrated interval");
    }
    if (segments_.empty()) return states_.front();
    t = std::clamp(t, times_.front(), times_.back());
    // Locate the accepted step whose interval contains t.
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t idx = static_cast<std::size_t>(std::distance(times_.begin(), it));
    if (idx > 0) --idx;
    if (idx >= segments_.size()) idx = segments_.size() - 1;
    return eval_segment(segments_[idx], t);
}

OdeSolution integrate_dopri5(const OdeRhs& rhs, double t0, const std::vector<double>& y0,
                             double t_end, const OdeSettings& settings,
                             const OdeEvent& event) {
    if (!(t_end > t0)) throw DomainError("integrate_dopri5 requires t_end > t0");
    if (!(settings.rel_tol > 0.0) || !(settings.abs_tol > 0.0)) {
        throw DomainError("integrate_dopri5 requires positive tolerances");
    }
    const std::size_t dim = y0.size();
    if (dim == 0) throw DomainError("integrate_dopri5 requires a nonempty state");

    OdeSolution sol;
    sol.times_.push_back(t0);
    sol.states_.push_back(y0);

    if (event && event(t0, y0) <= 0.0) {
        sol.reason_ = StopReason::collision;
        return sol;
    }

    std::vector<double> y = y0;
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
    std::vector<double> ytmp(dim), ynew(dim);
    rhs(t0, y, k1);

    double t = t0;
    double h = settings.initial_step > 0.0
                   ? std::min(settings.initial_step, t_end - t0)
                   : initial_step_guess(rhs, t0, y, k1, t_end, settings);
    const double uround = std::numeric_limits<double>::epsilon();
    // Lund-stabilized step controller constants.
    const double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
    const double fac_shrink = 5.0, fac_grow = 0.1;  // bounds on h / h_new
    double facold = 1e-4;

    for (long step = 0; step < settings.max_steps; ++step) {
        if (t >= t_end) break;
        if (settings.max_step > 0.0) h = std::min(h, settings.max_step);
        bool last = false;
        if (t + h >= t_end) {
            h = t_end - t;
            last = true;
        }
        if (h <= 16.0 * uround * std::max(1.0, std::abs(t))) {
            sol.reason_ = StopReason::step_underflow;
            return sol;
        }

        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] +
                      h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < dim; ++i)
            ynew[i] = y[i] +
                      h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
            double sc = settings.abs_tol +
                        settings.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / static_cast<double>(dim));

        double fac11 = std::pow(std::max(err, 1e-30), expo1);
        if (err > 1.0) {
            h /= std::min(fac_shrink, fac11 / safe);
            continue;
        }
        double fac = std::clamp(fac11 / std::pow(facold, beta) / safe, fac_grow, fac_shrink);
        facold = std::max(err, 1e-4);

        OdeSolution::Segment seg;
        seg.t0 = t;
        seg.h = h;
        seg.r1.resize(dim);
        seg.r2.resize(dim);
        seg.r3.resize(dim);
        seg.r4.resize(dim);
        seg.r5.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            double ydiff = ynew[i] - y[i];
            double bspl = h * k1[i] - ydiff;
            seg.r1[i] = y[i];
            seg.r2[i] = ydiff;
            seg.r3[i] = bspl;
            seg.r4[i] = ydiff - h * k7[i] - bspl;
            seg.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                             d7 * k7[i]);
        }
        sol.segments_.push_back(std::move(seg));

        double t_new = last ? t_end : t + h;
        if (event) {
            double g = event(t_new, ynew);
            if (g <= 0.0) {
                // Refine the crossing by bisection on the dense output.
                double lo = t, hi = t_new;
                for (int iter = 0; iter < 200 && hi - lo > 4.0 * uround * std::max(1.0, hi);
                     ++iter) {
                    double mid = lo + 0.5 * (hi - lo);
                    auto ymid = sol.eval_segment(sol.segments_.back(), mid);
                    if (event(mid, ymid) <= 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                sol.times_.push_back(hi);
                sol.states_.push_back(sol.eval_segment(sol.segments_.back(), hi));
                sol.reason_ = StopReason::collision;
                return sol;
            }
        }

        sol.times_.push_back(t_new);
        sol.states_.push_back(ynew);
        t = t_new;
        y = ynew;
        std::swap(k1, k7);  // FSAL

        if (last) {
            sol.reason_ = StopReason::reached_end;
            return sol;
        }
        h /= fac;
    }

    if (t >= t_end) {
        sol.reason_ = StopReason::reached_end;
        return sol;
    }
    throw ConvergenceError("integrate_dopri5 exceeded max_steps", t, 0);
}

}  // namespace rpcc
