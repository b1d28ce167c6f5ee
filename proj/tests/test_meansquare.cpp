#include "cuspsum/meansquare.hpp"

#include "cuspsum/quadrature.hpp"

#include "doctest.h"
#include "test_table.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace cuspsum;

namespace {

ExperimentConfig small_config(double m0, double delta, double big_t, std::int64_t k = 1,
                              std::int64_t h = 1) {
    ExperimentConfig c;
    c.m = m0;
    c.k = k;
    c.h = h;
    c.delta_override = delta;
    c.big_t_override = big_t;
    return c;
}

// Dense Riemann-sum oracle with samples aligned so the step-function jumps
// land on cell edges (integer M, delta, T).
double dense_lhs(const ExperimentConfig& cfg, const CoefficientTable& table,
                 int samples) {
    RationalTwist twist(cfg.h, cfg.k);
    BumpWeight w(cfg.m, cfg.delta(), cfg.ramp_fraction);
    double h_step = cfg.delta() / samples;
    double acc = 0.0, comp = 0.0;
    for (int i = 0; i < samples; ++i) {
        double x = cfg.m + (double(i) + 0.5) * h_step;
        double v = w(x) * std::norm(short_sum(table, twist, x, cfg.big_t()).value);
        double y = v - comp;
        double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc * h_step;
}

} // namespace

TEST_CASE("config validation") {
    auto t = CoefficientTable::build(1000);
    ExperimentConfig c = small_config(100.0, 50.0, 10.0);
    CHECK(c.validate(t).empty());

    c.delta_exp = 0.5;
    CHECK_THROWS_AS(c.validate(t), std::invalid_argument);
    c.delta_exp = 1.0;
    CHECK_THROWS_AS(c.validate(t), std::invalid_argument);
    c.delta_exp = 0.6;

    c.k = 9; // 9 > 100^0.45 ~ 7.9
    CHECK_THROWS_AS(c.validate(t), std::invalid_argument);
    c.k = 7; // above 100^0.4 ~ 6.3 -> warning
    CHECK(!c.validate(t).empty());
    c.k = 1;

    c.big_t_override = 2000.0; // exceeds the table
    CHECK_THROWS_AS(c.validate(t), std::invalid_argument);
}

TEST_CASE("defaults follow the theorem parameters") {
    ExperimentConfig c;
    c.m = 10000.0;
    c.k = 2;
    CHECK(c.big_t() == doctest::Approx(std::pow(10000.0, 0.6)));
    CHECK(c.delta() == doctest::Approx(std::fmin(4.0 * std::pow(10000.0, 0.55), 10000.0)));
}

TEST_CASE("split point") {
    ExperimentConfig c = small_config(1e4, 1e2, 1e3);
    CHECK(split_point(c) == doctest::Approx(100.0)); // T >= delta: M^2 T^-2
    c = small_config(1e4, 1e3, 1e2);
    CHECK(split_point(c) == doctest::Approx(1000.0)); // delta >= T: M^2/(T delta)
    c = small_config(1e4, 500.0, 500.0); // tie: both give M^2 T^-2
    CHECK(split_point(c) == doctest::Approx(1e8 / 25e4));
    // always the min of the two expressions
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(10.0, 5000.0);
    for (int i = 0; i < 50; ++i) {
        double dl = d(rng), bt = d(rng);
        c = small_config(1e4, dl, bt);
        CHECK(split_point(c) ==
              doctest::Approx(std::fmin(1e8 / (bt * bt), 1e8 / (bt * dl))));
    }
}

TEST_CASE("lhs is zero when no window contains an integer") {
    auto t = CoefficientTable::build(100);
    ExperimentConfig c = small_config(10.55, 0.3, 0.1);
    auto r = lhs_exact(c, t);
    CHECK(r.value == 0.0);
}

TEST_CASE("lhs against the dense oracle") {
    const auto& t = shared_table();
    ExperimentConfig c = small_config(100.0, 50.0, 10.0);
    auto exact = lhs_exact(c, t);
    double oracle = dense_lhs(c, t, 100000);
    CHECK(exact.value == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(exact.piece_count > 50);

    ExperimentConfig c2 = small_config(300.0, 80.0, 25.0, 3, 2);
    CHECK(lhs_exact(c2, t).value == doctest::Approx(dense_lhs(c2, t, 100000)).epsilon(1e-6));
}

TEST_CASE("doubling every a(n) quadruples the lhs exactly") {
    auto base = CoefficientTable::build(400);
    std::vector<int128> doubled;
    for (std::uint64_t n = 1; n <= 400; ++n) doubled.push_back(2 * base.tau(n));
    CoefficientTable scaled(std::move(doubled));
    ExperimentConfig c = small_config(100.0, 50.0, 10.0);
    double a = lhs_exact(c, base).value;
    double b = lhs_exact(c, scaled).value;
    CHECK(b == 4.0 * a);
}

TEST_CASE("diagonal identity") {
    CHECK(diagonal_identity_check(7, 1000.0, 0.0, 3) == 0.0);
    CHECK(diagonal_identity_check(7, 1000.0, 50.0, 3) < 1e-10);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint64_t> nd(1, 100000);
    std::uniform_real_distribution<double> xd(1.0, 1e6), td(0.0, 1e4);
    std::uniform_int_distribution<std::int64_t> kd(1, 50);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
        worst = std::fmax(worst, diagonal_identity_check(nd(rng), xd(rng), td(rng), kd(rng)));
    CHECK(worst < 1e-10);
}

TEST_CASE("main term is nonnegative and empty below truncation 1") {
    const auto& t = shared_table();
    // T > M makes M^2 T^-2 < 1
    ExperimentConfig c = small_config(100.0, 50.0, 120.0);
    CHECK(main_term_S(c, t) == 0.0);

    ExperimentConfig c2 = small_config(1000.0, 200.0, 400.0, 2, 1);
    CHECK(main_term_S(c2, t) >= 0.0);
}

TEST_CASE("main term does not depend on h") {
    const auto& t = shared_table();
    ExperimentConfig a = small_config(2000.0, 300.0, 500.0, 5, 2);
    ExperimentConfig b = small_config(2000.0, 300.0, 500.0, 5, 3);
    CHECK(main_term_S(a, t) == main_term_S(b, t));
}

TEST_CASE("n=1 inner integral agrees with a 10x-density oracle") {
    const double m0 = 10000.0, delta = 1000.0, big_t = 1000.0;
    const std::int64_t k = 1;
    BumpWeight w(m0, delta);
    auto integrand = [&](double x) {
        double wv = w(x);
        if (wv == 0.0) return 0.0;
        dd xs = two_sum(x, big_t);
        dd pa = dd_div(dd_mul(dd_four_pi, dd_sqrt(dd_mul(xs, 1.0))), double(k));
        dd pb = dd_div(dd_mul(dd_four_pi, dd_sqrt(dd_mul(dd{x, 0.0}, 1.0))), double(k));
        double sm = std::sin(dd_mod_two_pi(dd_div(dd_sub(pa, pb), 2.0)));
        double sp = std::sin(dd_mod_two_pi(
            dd_add(dd_div(dd_add(pa, pb), 2.0), -std::numbers::pi / 4.0)));
        return wv * std::sqrt(x) * sm * sm * sp * sp;
    };
    double lambda = double(k) * std::sqrt(m0);
    double panel = std::fmin(delta / 16.0, lambda / 8.0);
    double coarse = panel_integrate(integrand, m0, m0 + delta, panel);
    double fine = panel_integrate(integrand, m0, m0 + delta, panel / 10.0);
    CHECK(coarse == doctest::Approx(fine).epsilon(1e-6));
}

TEST_CASE("error budget") {
    ExperimentConfig c = small_config(1e4, 1e3, 1e3, 1, 1);
    auto b = error_budget(c, 0.0);
    CHECK(b.cross_term == 0.0);
    CHECK(b.voronoi_term == doctest::Approx(std::pow(1e4, 1.05)));
    CHECK(b.diagonal_term == doctest::Approx(1e3 * std::pow(1e4, 0.05) * std::sqrt(1e3)));
    CHECK(b.total == doctest::Approx(b.voronoi_term + b.diagonal_term));

    // monotone nondecreasing in k for fixed M, delta, T
    double prev = 0.0;
    for (std::int64_t k = 1; k <= 6; ++k) {
        ExperimentConfig ck = small_config(1e4, 1e3, 1e3, k, 1);
        auto bk = error_budget(ck, 123.0);
        CHECK(bk.total >= prev);
        prev = bk.total;
    }

    CHECK_THROWS_AS(error_budget(c, -1.0), std::invalid_argument);
}

TEST_CASE("corollary regimes") {
    // k=1, T = M^0.6, M=1e4: T M^{-1/2} = 10^{0.4} > 1 -> regime 1
    ExperimentConfig c;
    c.m = 1e4;
    c.delta_exp = 0.6;
    c.k = 1;
    auto cb = corollary_bound(c);
    CHECK(cb.regime == 1);
    CHECK(cb.applicable == cb.bound_small_k);

    // k=5: T M^{-1/2} ~ 2.5 << 5 << sqrt(T) ~ 15.8 -> regime 2
    c.k = 5;
    cb = corollary_bound(c);
    CHECK(cb.regime == 2);
    CHECK(cb.applicable == cb.bound_mid_k);

    // k exactly at sqrt(T) -> regime 3 boundary
    ExperimentConfig c3 = small_config(1e4, 1e3, 16.0, 4, 1);
    cb = corollary_bound(c3);
    CHECK(cb.boundary);

    // corollary 3 composite value
    CHECK(cb.corollary3 ==
          doctest::Approx(std::fmin(cb.bound_mid_k, cb.bound_small_k) +
                          16.0 * std::pow(1e4, 1.05)));
}

TEST_CASE("run_experiment populates the report deterministically") {
    const auto& t = shared_table();
    ExperimentConfig c = small_config(1000.0, 300.0, 80.0, 2, 1);
    auto r1 = run_experiment(c, t);
    auto r2 = run_experiment(c, t);
    CHECK(r1.lhs >= 0.0);
    CHECK(r1.main_term_s >= 0.0);
    CHECK(r1.lhs == r2.lhs);
    CHECK(r1.main_term_s == r2.main_term_s);
    CHECK(r1.breakpoint_count == r2.breakpoint_count);
    CHECK(r1.split == split_point(c));
    CHECK(r1.budget.total > 0.0);
    CHECK(r1.corollary.regime >= 1);
    CHECK(r1.ratio == (r1.main_term_s > 0.0 ? r1.lhs / r1.main_term_s : 0.0));
}
