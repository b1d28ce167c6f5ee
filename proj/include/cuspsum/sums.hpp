#pragma once

#include "cuspsum/dd.hpp"
#include "cuspsum/tau_table.hpp"
#include "cuspsum/twist.hpp"

#include <complex>

namespace cuspsum {

struct WindowSum {
    std::complex<double> value{0.0, 0.0};
    std::int64_t first_n = 1; // integers actually summed; first_n = last_n+1 when empty
    std::int64_t last_n = 0;
};

// sum over x <= n <= x+T of a(n) e(hn/k), both endpoints inclusive.
WindowSum short_sum(const CoefficientTable& table, const RationalTwist& twist,
                    double x, double big_t);

// sum over n <= x of a(n) e(hn/k), compensated accumulation in ascending n.
std::complex<double> long_sum(const CoefficientTable& table, const RationalTwist& twist,
                              double x);

// Voronoi-dual phase 4*pi*sqrt(n*x)/k - pi/4, reduced mod 2*pi.
// x carried as a two-term compensated value so the phase is accurate to
// ~1e-9 radians absolute for n*x up to 1e12.
double voronoi_phase(std::uint64_t n, dd x, std::int64_t k);

// Truncated Voronoi main term
//   (pi*sqrt 2)^{-1} x^{1/4} k^{1/2}
//     * sum_{M1 < n <= M2} a(n) e(-h_bar n/k) n^{-3/4} cos(4 pi sqrt(nx)/k - pi/4).
std::complex<double> s_window(const CoefficientTable& table, const RationalTwist& twist,
                              dd x, double m1, double m2);

// s_window over 0 < n <= N.
std::complex<double> voronoi_truncated(const CoefficientTable& table,
                                       const RationalTwist& twist, dd x, double n_trunc);

} // namespace cuspsum
