#pragma once

namespace cuspsum {

// C-infinity weight supported on [M, M+delta], identically 1 on the plateau
// [M+delta', M+delta-delta'], rising/falling through the standard
// psi(t) = exp(-1/t) transition g(t) = psi(t) / (psi(t) + psi(1-t)).
class BumpWeight {
public:
    // delta' = ramp_fraction * delta; ramp_fraction in (0, 1/2].
    BumpWeight(double m, double delta, double ramp_fraction = 0.25);

    double operator()(double x) const;

    double left() const { return m_; }
    double right() const { return m_ + delta_; }
    double m() const { return m_; }
    double delta() const { return delta_; }
    double ramp() const { return ramp_; }
    double plateau_left() const { return m_ + ramp_; }
    double plateau_right() const { return m_ + delta_ - ramp_; }

private:
    double m_;
    double delta_;
    double ramp_; // delta'
};

} // namespace cuspsum
