#include "cuspsum/bump_weight.hpp"

#include <cmath>
#include <stdexcept>

namespace cuspsum {

namespace {

// g(t) = psi(t)/(psi(t)+psi(1-t)) with psi(t)=exp(-1/t), monotone 0->1 on [0,1].
// t is clamped away from the endpoints; the clamping error is < 1e-300.
double transition(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    constexpr double eps = 1e-12;
    t = std::fmin(std::fmax(t, eps), 1.0 - eps);
    double a = std::exp(-1.0 / t);
    double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

} // namespace

BumpWeight::BumpWeight(double m, double delta, double ramp_fraction)
    : m_(m), delta_(delta), ramp_(ramp_fraction * delta) {
    if (!(delta > 0.0))
        throw std::invalid_argument("BumpWeight: delta must be positive");
    if (!(ramp_fraction > 0.0) || ramp_fraction > 0.5)
        throw std::invalid_argument("BumpWeight: ramp_fraction must be in (0, 1/2]");
}

double BumpWeight::operator()(double x) const {
    if (x <= m_ || x >= m_ + delta_) return 0.0;
    if (x < m_ + ramp_) return transition((x - m_) / ramp_);
    if (x > m_ + delta_ - ramp_) return transition((m_ + delta_ - x) / ramp_);
    return 1.0;
}

} // namespace cuspsum
