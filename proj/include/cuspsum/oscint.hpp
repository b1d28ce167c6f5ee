#pragma once

#include "cuspsum/bump_weight.hpp"
#include "cuspsum/dd.hpp"

#include <complex>
#include <cstdint>
#include <optional>

namespace cuspsum {

enum class SignPattern { Sum, Difference };

// Which of the two frequencies sees x+T versus x.
enum class ShiftPattern {
    BothPlain,   // sqrt(n x),     sqrt(m x)
    FirstShift,  // sqrt(n (x+T)), sqrt(m x)
    SecondShift, // sqrt(n x),     sqrt(m (x+T))
    BothShift    // sqrt(n (x+T)), sqrt(m (x+T))
};

// Integral  int w(x) x^{1/2} e( 2(sqrt(n T1(x)) +- sqrt(m T2(x)))/k ) dx
// over the support of w, with T1, T2 in {x, x+T} per the shift pattern.
struct OscIntegralSpec {
    BumpWeight weight;
    std::int64_t k = 1;
    std::uint64_t n = 1;
    std::uint64_t m = 1;
    double big_t = 0.0;
    SignPattern sign = SignPattern::Difference;
    ShiftPattern shift = ShiftPattern::BothPlain;
};

// Phase in cycles (the argument of e(.)), evaluated in compensated arithmetic.
dd osc_phase_cycles(const OscIntegralSpec& spec, double x);

// Phase derivative in cycles per unit x.
double osc_phase_derivative(const OscIntegralSpec& spec, double x);

// Oscillation-resolving composite quadrature; panel length
// <= min(Delta/16, lambda/8) / density, lambda = 1/max|phase'|.
// Doubles the density until the estimated absolute error (comparison against
// the half-density result) is <= tolerance * Delta * sqrt(M + Delta).
std::complex<double> integrate(const OscIntegralSpec& spec, double tolerance,
                               double density = 1.0,
                               std::uint64_t panel_cap = 4'000'000);

// Stationary point of sqrt(n(x+T)) - sqrt(m x): x* = mT/(n-m) when n > m,
// if it falls inside [M, M+delta].
std::optional<double> stationary_locus(std::uint64_t n, std::uint64_t m, double big_t,
                                       double m_left, double delta);

// Closed integer interval; empty when lo > hi.
struct IntegerBand {
    std::int64_t lo = 1;
    std::int64_t hi = 0;
    bool empty() const { return lo > hi; }
    std::int64_t count() const { return empty() ? 0 : hi - lo + 1; }
};

// Integer n-range of I_{m,c} = [m(1 + T/(M+delta)) - c, m(1 + T/M) + c],
// c = M^{1/2+eps} k sqrt(m) / delta * c_multiplier.
IntegerBand resonant_band(std::uint64_t m, double big_t, double m_left, double delta,
                          std::int64_t k, double eps, double c_multiplier = 1.0);

} // namespace cuspsum
