#include "cuspsum/meansquare.hpp"

#include "cuspsum/dd.hpp"
#include "cuspsum/quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cuspsum {

double ExperimentConfig::big_t() const {
    return big_t_override ? *big_t_override : std::pow(m, delta_exp);
}

double ExperimentConfig::delta() const {
    if (delta_override) return *delta_override;
    return std::fmin(double(k) * double(k) * std::pow(m, 0.5 + eps), m);
}

std::string ExperimentConfig::validate(const CoefficientTable& table) const {
    if (!(delta_exp > 0.5) || !(delta_exp < 1.0))
        throw std::invalid_argument("config: delta_exp must satisfy 1/2 < delta < 1");
    if (k < 1) throw std::invalid_argument("config: k must be >= 1");
    if (h < 0) throw std::invalid_argument("config: h must be >= 0");
    if (m < 1.0) throw std::invalid_argument("config: M must be >= 1");
    if (double(k) > std::pow(m, 0.45))
        throw std::invalid_argument("config: k exceeds M^0.45");
    if (!(eps > 0.0)) throw std::invalid_argument("config: eps must be > 0");
    if (m + delta() + big_t() > double(table.n_max()))
        throw std::invalid_argument("config: M + Delta + T exceeds coefficient table");
    if (double(k) > std::pow(m, 0.4))
        return "warning: k > M^0.4, close to the k << M^{1/2} limit";
    return {};
}

LhsResult lhs_exact(const ExperimentConfig& config, const CoefficientTable& table) {
    config.validate(table);
    RationalTwist twist(config.h, config.k);
    double m0 = config.m, big_delta = config.delta(), big_t = config.big_t();
    double b = m0 + big_delta;
    BumpWeight w(m0, big_delta, config.ramp_fraction);

    // The window sum jumps exactly at x in Z (term x leaves) and at
    // x in Z - T (term x+T enters). Ramp edges are added so each piece is
    // analytic for the per-piece quadrature.
    std::vector<double> breakpoints;
    breakpoints.push_back(m0);
    breakpoints.push_back(b);
    breakpoints.push_back(w.plateau_left());
    breakpoints.push_back(w.plateau_right());
    for (double n = std::floor(m0) + 1.0; n < b; n += 1.0)
        if (n > m0) breakpoints.push_back(n);
    for (double j = std::floor(m0 + big_t) + 1.0; j - big_t < b; j += 1.0)
        if (j - big_t > m0) breakpoints.push_back(j - big_t);
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                      breakpoints.end());

    auto window_direct = [&](std::int64_t first, std::int64_t last) {
        std::complex<double> s{0.0, 0.0};
        for (std::int64_t n = first; n <= last; ++n)
            s += table.a(std::uint64_t(n)) * twist.e_hn(std::uint64_t(n));
        return s;
    };

    double total = 0.0, comp = 0.0;
    std::int64_t cur_first = 0, cur_last = -1;
    std::complex<double> window{0.0, 0.0};
    bool have_window = false;
    std::uint64_t pieces = 0;

    double panel_len = std::fmin(1.0, w.ramp() / 8.0);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        double lo = breakpoints[i], hi = breakpoints[i + 1];
        if (hi <= lo) continue;
        ++pieces;
        double mid = 0.5 * (lo + hi);
        auto first = std::int64_t(std::ceil(mid));
        auto last = std::int64_t(std::floor(mid + big_t));
        if (!have_window || pieces % 4096 == 0) {
            window = window_direct(first, last);
            have_window = true;
        } else {
            for (std::int64_t n = cur_first; n < first; ++n)
                window -= table.a(std::uint64_t(n)) * twist.e_hn(std::uint64_t(n));
            for (std::int64_t n = cur_last + 1; n <= last; ++n)
                window += table.a(std::uint64_t(n)) * twist.e_hn(std::uint64_t(n));
        }
        cur_first = first;
        cur_last = last;
        double norm = std::norm(window);
        if (norm != 0.0) {
            double piece = norm * panel_integrate([&](double x) { return w(x); },
                                                  lo, hi, panel_len);
            double y = piece - comp;
            double t = total + y;
            comp = (t - total) - y;
            total = t;
        }
    }
    return {total, pieces};
}

double split_point(const ExperimentConfig& config) {
    double m0 = config.m, big_t = config.big_t(), big_delta = config.delta();
    return std::fmin(m0 * m0 / (big_t * big_t), m0 * m0 / (big_t * big_delta));
}

namespace {

// sin^2((A-B)/2) * sin^2((A+B)/2) with A, B the two Voronoi phases at n;
// both phases and their sum/difference are formed in compensated arithmetic
// before any mod-2pi reduction.
double diagonal_sin_factors(std::uint64_t n, double x, double big_t, std::int64_t k) {
    dd xs = two_sum(x, big_t);
    dd pa = dd_div(dd_mul(dd_four_pi, dd_sqrt(dd_mul(xs, double(n)))), double(k));
    dd pb = dd_div(dd_mul(dd_four_pi, dd_sqrt(dd_mul(dd{x, 0.0}, double(n)))), double(k));
    double theta_minus = dd_mod_two_pi(dd_div(dd_sub(pa, pb), 2.0));
    dd sum_half = dd_add(dd_div(dd_add(pa, pb), 2.0), -std::numbers::pi / 4.0);
    double theta_plus = dd_mod_two_pi(sum_half);
    double sm = std::sin(theta_minus), sp = std::sin(theta_plus);
    return sm * sm * sp * sp;
}

} // namespace

double main_term_S(const ExperimentConfig& config, const CoefficientTable& table) {
    config.validate(table);
    double m0 = config.m, big_delta = config.delta(), big_t = config.big_t();
    double trunc = split_point(config);
    auto n_top = std::uint64_t(std::floor(trunc));
    if (n_top < 1) return 0.0;
    BumpWeight w(m0, big_delta, config.ramp_fraction);

    double total = 0.0, comp = 0.0;
    double sqrt_m = std::sqrt(m0);
    for (std::uint64_t n = 1; n <= n_top; ++n) {
        double lambda = double(config.k) * sqrt_m / std::sqrt(double(n));
        double panel = std::fmin(big_delta / 16.0, lambda / 8.0);
        double integral = panel_integrate(
            [&](double x) {
                double wv = w(x);
                if (wv == 0.0) return 0.0;
                return wv * std::sqrt(x) * diagonal_sin_factors(n, x, big_t, config.k);
            },
            m0, m0 + big_delta, panel);
        double an = table.a(n);
        double term = 2.0 * double(config.k) / (std::numbers::pi * std::numbers::pi) *
                      an * an * std::pow(double(n), -1.5) * integral;
        double y = term - comp;
        double t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    return total;
}

double diagonal_identity_check(std::uint64_t n, double x, double big_t, std::int64_t k) {
    if (n < 1 || x < 1.0 || big_t < 0.0 || k < 1)
        throw std::invalid_argument("diagonal_identity_check: bad arguments");
    dd xs = two_sum(x, big_t);
    dd pa = dd_add(dd_div(dd_mul(dd_four_pi, dd_sqrt(dd_mul(xs, double(n)))), double(k)),
                   -std::numbers::pi / 4.0);
    dd pb = dd_add(
        dd_div(dd_mul(dd_four_pi, dd_sqrt(dd_mul(dd{x, 0.0}, double(n)))), double(k)),
        -std::numbers::pi / 4.0);
    double cos_a = std::cos(dd_mod_two_pi(pa));
    double cos_b = std::cos(dd_mod_two_pi(pb));
    double lhs = (cos_a - cos_b) * (cos_a - cos_b);
    double sm = std::sin(dd_mod_two_pi(dd_div(dd_sub(pa, pb), 2.0)));
    double sp = std::sin(dd_mod_two_pi(dd_div(dd_add(pa, pb), 2.0)));
    double rhs = 4.0 * sm * sm * sp * sp;
    return std::abs(lhs - rhs);
}

ErrorBudget error_budget(const ExperimentConfig& config, double s_value) {
    if (s_value < 0.0) throw std::invalid_argument("error_budget: S must be >= 0");
    double m0 = config.m, big_delta = config.delta(), big_t = config.big_t();
    double c = config.constant_multiplier;
    ErrorBudget b;
    b.voronoi_term = c * double(config.k) * double(config.k) * std::pow(m0, 1.0 + config.eps);
    b.diagonal_term =
        c * big_delta * std::pow(m0, config.eps) * std::sqrt(big_t) * double(config.k);
    b.cross_term = std::sqrt(s_value * (b.voronoi_term + b.diagonal_term));
    b.total = b.voronoi_term + b.diagonal_term + b.cross_term;
    return b;
}

CorollaryBounds corollary_bound(const ExperimentConfig& config) {
    double m0 = config.m, big_delta = config.delta(), big_t = config.big_t();
    double eps = config.eps;
    CorollaryBounds cb;
    cb.bound_small_k = big_delta * std::pow(m0, 0.5 + eps) * double(config.k);
    cb.bound_mid_k = big_delta * big_t * std::pow(m0, eps);
    cb.bound_large_k = big_delta * std::pow(m0, eps) * double(config.k) * double(config.k);
    double t1 = big_t / std::sqrt(m0); // k threshold between regimes 1 and 2
    double t2 = std::sqrt(big_t);      // k threshold between regimes 2 and 3
    double kd = double(config.k);
    if (kd < t1) {
        cb.regime = 1;
        cb.applicable = cb.bound_small_k;
    } else if (kd < t2) {
        cb.regime = 2;
        cb.applicable = cb.bound_mid_k;
    } else {
        cb.regime = 3;
        cb.applicable = cb.bound_large_k;
    }
    cb.boundary = (kd >= t1 / 2.0 && kd <= t1 * 2.0) || (kd >= t2 / 2.0 && kd <= t2 * 2.0);
    cb.corollary3 = std::fmin(cb.bound_mid_k, cb.bound_small_k) +
                    double(config.k) * double(config.k) * std::pow(m0, 1.0 + eps);
    return cb;
}

MeanSquareReport run_experiment(const ExperimentConfig& config,
                                const CoefficientTable& table) {
    auto start = std::chrono::steady_clock::now();
    MeanSquareReport report;
    LhsResult lhs = lhs_exact(config, table);
    report.lhs = lhs.value;
    report.breakpoint_count = lhs.piece_count;
    report.main_term_s = main_term_S(config, table);
    report.split = split_point(config);
    report.budget = error_budget(config, report.main_term_s);
    report.corollary = corollary_bound(config);
    report.ratio = report.main_term_s > 0.0 ? report.lhs / report.main_term_s : 0.0;
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace cuspsum
