#include "cuspsum/sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cuspsum {

namespace {

// Kahan accumulator for complex values.
struct ComplexAccum {
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> comp{0.0, 0.0};
    void add(std::complex<double> v) {
        std::complex<double> y = v - comp;
        std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace

WindowSum short_sum(const CoefficientTable& table, const RationalTwist& twist,
                    double x, double big_t) {
    if (x < 1.0 || big_t < 0.0)
        throw std::invalid_argument("short_sum: require x >= 1, T >= 0");
    if (x + big_t > double(table.n_max()))
        throw std::invalid_argument("short_sum: window exceeds coefficient table");
    auto first = std::int64_t(std::ceil(x));
    auto last = std::int64_t(std::floor(x + big_t));
    WindowSum w;
    w.first_n = first;
    w.last_n = last;
    if (first > last) return w;
    ComplexAccum acc;
    for (std::int64_t n = first; n <= last; ++n)
        acc.add(table.a(std::uint64_t(n)) * twist.e_hn(std::uint64_t(n)));
    w.value = acc.sum;
    return w;
}

std::complex<double> long_sum(const CoefficientTable& table, const RationalTwist& twist,
                              double x) {
    if (x < 1.0 || x > double(table.n_max()))
        throw std::invalid_argument("long_sum: x out of table range");
    auto last = std::uint64_t(std::floor(x));
    ComplexAccum acc;
    for (std::uint64_t n = 1; n <= last; ++n)
        acc.add(table.a(n) * twist.e_hn(n));
    return acc.sum;
}

double voronoi_phase(std::uint64_t n, dd x, std::int64_t k) {
    dd nx = dd_mul(x, double(n));
    dd root = dd_sqrt(nx);
    dd phase = dd_div(dd_mul(dd_four_pi, root), double(k));
    phase = dd_add(phase, -std::numbers::pi / 4.0);
    return dd_mod_two_pi(phase);
}

std::complex<double> s_window(const CoefficientTable& table, const RationalTwist& twist,
                              dd x, double m1, double m2) {
    if (m1 < 0.0 || m2 < m1 || m2 > double(table.n_max()))
        throw std::invalid_argument("s_window: bad truncation range");
    double xd = x.hi + x.lo;
    if (xd < 1.0) throw std::invalid_argument("s_window: x must be >= 1");
    auto first = std::uint64_t(std::floor(m1)) + 1;
    auto last = std::uint64_t(std::floor(m2));
    ComplexAccum acc;
    for (std::uint64_t n = first; n <= last; ++n) {
        double phi = voronoi_phase(n, x, twist.k());
        double amp = table.a(n) * std::pow(double(n), -0.75) * std::cos(phi);
        acc.add(amp * twist.e_minus_hbar_n(n));
    }
    double prefactor = std::pow(xd, 0.25) * std::sqrt(double(twist.k())) /
                       (std::numbers::pi * std::numbers::sqrt2);
    return prefactor * acc.sum;
}

std::complex<double> voronoi_truncated(const CoefficientTable& table,
                                       const RationalTwist& twist, dd x, double n_trunc) {
    if (n_trunc <= 0.0) return {0.0, 0.0};
    return s_window(table, twist, x, 0.0, n_trunc);
}

} // namespace cuspsum
