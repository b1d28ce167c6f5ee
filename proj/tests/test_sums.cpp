#include "cuspsum/sums.hpp"

#include "doctest.h"
#include "test_table.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace cuspsum;

TEST_CASE("twist construction") {
    RationalTwist t11(1, 1);
    CHECK(t11.h_bar() == 0);
    CHECK(t11.e_hn(7) == std::complex<double>(1.0, 0.0));

    RationalTwist t35(3, 5);
    CHECK(t35.h_bar() == 2);
    CHECK((3 * t35.h_bar()) % 5 == 1);

    CHECK_THROWS_AS(RationalTwist(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(RationalTwist(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(RationalTwist(-1, 3), std::invalid_argument);
}

TEST_CASE("roots of unity are unit modulus and periodic") {
    RationalTwist t(3, 7);
    for (std::uint64_t j = 0; j < 20; ++j) {
        CHECK(std::abs(t.root(j)) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(t.root(j) - t.root(j + 7)) < 1e-15);
    }
    // brute-force inverse check over all residues
    for (std::int64_t h = 1; h < 7; ++h) {
        RationalTwist tw(h, 7);
        CHECK((h * tw.h_bar()) % 7 == 1);
    }
}

TEST_CASE("short_sum basics") {
    auto t = CoefficientTable::build(100);
    RationalTwist untwisted(1, 1);

    auto empty = short_sum(t, untwisted, 10.5, 0.4);
    CHECK(empty.value == std::complex<double>(0.0, 0.0));
    CHECK(empty.first_n > empty.last_n);

    auto single = short_sum(t, untwisted, 1.0, 0.0);
    CHECK(single.value.real() == doctest::Approx(1.0));
    CHECK(single.first_n == 1);
    CHECK(single.last_n == 1);

    RationalTwist half(1, 2);
    auto two = short_sum(t, half, 2.0, 1.0); // a(2)e(1) + a(3)e(3/2) = a(2) - a(3)
    CHECK(two.value.real() == doctest::Approx(t.a(2) - t.a(3)).epsilon(1e-14));
    CHECK(std::abs(two.value.imag()) < 1e-14);

    CHECK_THROWS_AS(short_sum(t, untwisted, 90.0, 20.0), std::invalid_argument);
    CHECK_THROWS_AS(short_sum(t, untwisted, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("long_sum basics and Jutila-normalized boundedness") {
    const auto& t = shared_table();
    RationalTwist untwisted(1, 1);
    CHECK(long_sum(t, untwisted, 1.0).real() == doctest::Approx(1.0));
    CHECK(long_sum(t, untwisted, 3.0).real() ==
          doctest::Approx(t.a(1) + t.a(2) + t.a(3)).epsilon(1e-13));

    // |long_sum(x)| / sqrt(x) stays bounded; the constant 2.5 was found by
    // scanning this grid once and is frozen with margin.
    double worst = 0.0;
    for (double x = 1000.0; x <= 100000.0; x *= 1.37)
        worst = std::fmax(worst, std::abs(long_sum(t, untwisted, x)) / std::sqrt(x));
    CHECK(worst < 2.5);
}

TEST_CASE("conjugation symmetry under h -> k-h") {
    auto t = CoefficientTable::build(500);
    RationalTwist tw(2, 7), conj_tw(5, 7);
    auto a = long_sum(t, tw, 400.0);
    auto b = long_sum(t, conj_tw, 400.0);
    CHECK(std::abs(a - std::conj(b)) < 1e-12);
    auto sa = short_sum(t, tw, 100.0, 50.0).value;
    auto sb = short_sum(t, conj_tw, 100.0, 50.0).value;
    CHECK(std::abs(sa - std::conj(sb)) < 1e-12);
}

TEST_CASE("short_sum equals a difference of long_sums") {
    auto t = CoefficientTable::build(2000);
    RationalTwist tw(2, 5);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xd(2.0, 1500.0), td(0.0, 400.0);
    for (int i = 0; i < 100; ++i) {
        double x = xd(rng);
        double bt = std::fmin(td(rng), 1999.0 - x);
        auto w = short_sum(t, tw, x, bt).value;
        double below = std::ceil(x) - 1.0; // sum over n < x
        std::complex<double> diff = long_sum(t, tw, std::floor(x + bt));
        if (below >= 1.0) diff -= long_sum(t, tw, below);
        CHECK(std::abs(w - diff) < 1e-10);
    }
}

TEST_CASE("voronoi phase sanity") {
    // n=1, x=k^2/16: 4*pi*sqrt(x)/k - pi/4 = pi - pi/4 = 3*pi/4
    CHECK(voronoi_phase(1, dd{1.0, 0.0}, 4) ==
          doctest::Approx(3.0 * std::numbers::pi / 4.0).epsilon(1e-12));
    CHECK(voronoi_phase(1, dd{4.0, 0.0}, 8) ==
          doctest::Approx(3.0 * std::numbers::pi / 4.0).epsilon(1e-12));
}

TEST_CASE("voronoi phase matches long double for large n*x") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xd(1.0, 1e6);
    std::uniform_int_distribution<std::uint64_t> nd(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        double x = xd(rng);
        std::uint64_t n = nd(rng);
        std::int64_t k = 1 + std::int64_t(i % 9);
        long double arg = 4.0L * std::numbers::pi_v<long double> *
                              sqrtl((long double)n * (long double)x) / (long double)k -
                          std::numbers::pi_v<long double> / 4.0L;
        long double reduced = fmodl(arg, 2.0L * std::numbers::pi_v<long double>);
        if (reduced < 0.0L) reduced += 2.0L * std::numbers::pi_v<long double>;
        double got = voronoi_phase(n, dd{x, 0.0}, k);
        double diff = std::abs(double(reduced) - got);
        diff = std::fmin(diff, std::abs(diff - 2.0 * std::numbers::pi));
        CHECK(diff < 1e-6);
    }
}

TEST_CASE("s_window additivity and truncation edge") {
    const auto& t = shared_table();
    RationalTwist tw(1, 3);
    dd x{5000.0, 0.0};
    CHECK(voronoi_truncated(t, tw, x, 0.0) == std::complex<double>(0.0, 0.0));
    auto whole = s_window(t, tw, x, 0.0, 500.0);
    auto part1 = s_window(t, tw, x, 0.0, 137.0);
    auto part2 = s_window(t, tw, x, 137.0, 500.0);
    CHECK(std::abs(whole - (part1 + part2)) <= 1e-12 * std::abs(whole));
    CHECK(std::abs(s_window(t, tw, x, 42.0, 42.0)) == 0.0);
    CHECK(std::abs(whole - voronoi_truncated(t, tw, x, 500.0)) == 0.0);
}

TEST_CASE("s_window against a naive term-by-term oracle") {
    const auto& t = shared_table();
    RationalTwist tw(1, 3);
    const double x = 5000.0;
    auto got = s_window(t, tw, dd{x, 0.0}, 10.0, 100.0);
    // independent loop in long double with explicit phases
    const long double pi = std::numbers::pi_v<long double>;
    std::complex<long double> acc{0.0L, 0.0L};
    for (int n = 11; n <= 100; ++n) {
        long double phase = 4.0L * pi * sqrtl((long double)n * x) / 3.0L - pi / 4.0L;
        long double a = (long double)t.a(std::uint64_t(n));
        long double dual = -2.0L * pi * (long double)(tw.h_bar() * n % 3) / 3.0L;
        std::complex<long double> term =
            a * powl((long double)n, -0.75L) * cosl(phase) *
            std::complex<long double>(cosl(dual), sinl(dual));
        acc += term;
    }
    acc *= powl(x, 0.25L) * sqrtl(3.0L) / (pi * sqrtl(2.0L));
    std::complex<double> want(double(acc.real()), double(acc.imag()));
    CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
}
