#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace rpcc {

/// Neumaier variant of compensated summation.  The compensation term also
/// captures the case |term| > |sum|, so the result is correct to within one
/// rounding of the exact sum for any addition order.
class CompensatedSum {
  public:
    void add(double term) {
        double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) {
            comp_ += (sum_ - t) + term;
        } else {
            comp_ += (term - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(const std::vector<double>& terms) {
    CompensatedSum acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace rpcc
