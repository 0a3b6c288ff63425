#pragma once

#include <functional>
#include <vector>

namespace rpcc {

enum class StopReason { reached_end, collision, step_underflow };

const char* stop_reason_name(StopReason reason);

struct OdeSettings {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double max_step = 0.0;      // 0 means no cap
    double initial_step = 0.0;  // 0 means choose automatically
    long max_steps = 2000000;
};

using OdeRhs = std::function<void(double t, const std::vector<double>& y,
                                  std::vector<double>& dydt)>;

/// Scalar event g(t, y); integration stops at the first accepted step where
/// g <= 0, with the crossing time refined on the dense output.
using OdeEvent = std::function<double(double t, const std::vector<double>& y)>;

/// Solution of one adaptive integration: the accepted mesh plus a dense
/// (fifth-order continuous) interpolant valid on [t_begin, t_final].
class OdeSolution {
  public:
    double t_begin() const { return times_.empty() ? 0.0 : times_.front(); }
    double t_final() const { return times_.empty() ? 0.0 : times_.back(); }
    StopReason reason() const { return reason_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<std::vector<double>>& states() const { return states_; }
    const std::vector<double>& y_final() const { return states_.back(); }

    /// Interpolated state at any t in [t_begin, t_final].
    std::vector<double> eval(double t) const;

  private:
    friend OdeSolution integrate_dopri5(const OdeRhs&, double, const std::vector<double>&,
                                        double, const OdeSettings&, const OdeEvent&);
    struct Segment {
        double t0 = 0.0;
        double h = 0.0;
        // Continuous-extension coefficients, one vector per order.
        std::vector<double> r1, r2, r3, r4, r5;
    };
    std::vector<double> eval_segment(const Segment& seg, double t) const;

    std::vector<double> times_;
    std::vector<std::vector<double>> states_;
    std::vector<Segment> segments_;
    StopReason reason_ = StopReason::reached_end;
};

/// Dormand-Prince 5(4) with FSAL, standard step-size controller, and the
/// fifth-order dense output.  Deterministic for identical inputs.
OdeSolution integrate_dopri5(const OdeRhs& rhs, double t0, const std::vector<double>& y0,
                             double t_end, const OdeSettings& settings,
                             const OdeEvent& event = nullptr);

}  // namespace rpcc
