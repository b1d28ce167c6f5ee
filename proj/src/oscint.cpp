#include "cuspsum/oscint.hpp"

#include "cuspsum/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cuspsum {

namespace {

bool first_shifted(ShiftPattern s) {
    return s == ShiftPattern::FirstShift || s == ShiftPattern::BothShift;
}
bool second_shifted(ShiftPattern s) {
    return s == ShiftPattern::SecondShift || s == ShiftPattern::BothShift;
}

} // namespace

dd osc_phase_cycles(const OscIntegralSpec& spec, double x) {
    dd x1 = first_shifted(spec.shift) ? two_sum(x, spec.big_t) : dd{x, 0.0};
    dd x2 = second_shifted(spec.shift) ? two_sum(x, spec.big_t) : dd{x, 0.0};
    dd r1 = dd_sqrt(dd_mul(x1, double(spec.n)));
    dd r2 = dd_sqrt(dd_mul(x2, double(spec.m)));
    dd combined = (spec.sign == SignPattern::Sum) ? dd_add(r1, r2) : dd_sub(r1, r2);
    return dd_div(dd_mul(combined, 2.0), double(spec.k));
}

double osc_phase_derivative(const OscIntegralSpec& spec, double x) {
    double x1 = first_shifted(spec.shift) ? x + spec.big_t : x;
    double x2 = second_shifted(spec.shift) ? x + spec.big_t : x;
    double d1 = std::sqrt(double(spec.n)) / std::sqrt(x1);
    double d2 = std::sqrt(double(spec.m)) / std::sqrt(x2);
    double combined = (spec.sign == SignPattern::Sum) ? d1 + d2 : d1 - d2;
    return combined / double(spec.k);
}

std::complex<double> integrate(const OscIntegralSpec& spec, double tolerance,
                               double density, std::uint64_t panel_cap) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("integrate: tolerance must be > 0");
    if (!(density > 0.0)) throw std::invalid_argument("integrate: density must be > 0");

    const BumpWeight& w = spec.weight;
    double a = w.left(), b = w.right(), delta = w.delta();

    // Wavelength from the fastest oscillation over the support; the phase
    // derivative is monotone enough that endpoint + coarse interior samples
    // capture the maximum.
    double max_dphi = 0.0;
    for (int i = 0; i <= 64; ++i) {
        double x = a + (b - a) * double(i) / 64.0;
        max_dphi = std::fmax(max_dphi, std::abs(osc_phase_derivative(spec, x)));
    }
    double panel = delta / 16.0;
    if (max_dphi > 0.0) panel = std::fmin(panel, 1.0 / (8.0 * max_dphi));
    panel /= density;

    auto integrand = [&](double x) -> std::complex<double> {
        double amp = w(x) * std::sqrt(x);
        if (amp == 0.0) return {0.0, 0.0};
        double theta = dd_mod_two_pi(dd_mul(osc_phase_cycles(spec, x), dd_two_pi));
        return amp * std::complex<double>(std::cos(theta), std::sin(theta));
    };

    double scale = delta * std::sqrt(b);
    std::complex<double> coarse = panel_integrate(integrand, a, b, panel, panel_cap);
    for (int refine = 0; refine < 6; ++refine) {
        panel *= 0.5;
        std::complex<double> fine = panel_integrate(integrand, a, b, panel, panel_cap);
        if (std::abs(fine - coarse) <= tolerance * scale) return fine;
        coarse = fine;
    }
    return coarse;
}

std::optional<double> stationary_locus(std::uint64_t n, std::uint64_t m, double big_t,
                                       double m_left, double delta) {
    if (n == 0 || m == 0) throw std::invalid_argument("stationary_locus: n, m >= 1");
    if (!(big_t > 0.0)) throw std::invalid_argument("stationary_locus: T must be > 0");
    if (n <= m) return std::nullopt;
    double x_star = double(m) * big_t / double(n - m);
    if (x_star >= m_left && x_star <= m_left + delta) return x_star;
    return std::nullopt;
}

IntegerBand resonant_band(std::uint64_t m, double big_t, double m_left, double delta,
                          std::int64_t k, double eps, double c_multiplier) {
    if (m == 0) throw std::invalid_argument("resonant_band: m >= 1");
    double c = std::pow(m_left, 0.5 + eps) * double(k) * std::sqrt(double(m)) / delta *
               c_multiplier;
    double lo = double(m) * (1.0 + big_t / (m_left + delta)) - c;
    double hi = double(m) * (1.0 + big_t / m_left) + c;
    IntegerBand band;
    band.lo = std::int64_t(std::ceil(lo));
    band.hi = std::int64_t(std::floor(hi));
    return band;
}

} // namespace cuspsum
