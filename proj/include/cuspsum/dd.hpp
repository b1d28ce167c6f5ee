#pragma once

// Two-term compensated (double-double) arithmetic, just enough to evaluate
// large oscillatory phases like 4*pi*sqrt(n*x)/k to ~1e-9 radians absolute
// when the argument itself is of size 1e7.

#include <cmath>

namespace cuspsum {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_add(dd a, double b) {
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd{-b.hi, -b.lo}); }

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, double b) {
    double q1 = a.hi / b;
    dd p = two_prod(q1, b);
    double q2 = ((a.hi - p.hi) - p.lo + a.lo) / b;
    return quick_two_sum(q1, q2);
}

// One Newton step on top of the double sqrt; enough for full dd accuracy.
inline dd dd_sqrt(dd a) {
    if (a.hi <= 0.0) return {0.0, 0.0};
    double r = std::sqrt(a.hi);
    dd r2 = two_prod(r, r);
    dd diff = dd_sub(a, r2);
    double corr = diff.hi / (2.0 * r);
    return quick_two_sum(r, corr);
}

inline constexpr dd dd_two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr dd dd_four_pi{12.566370614359172, 4.898587196589413e-16};

// Reduce to [0, 2*pi) keeping dd accuracy; argument assumed < ~1e15.
inline double dd_mod_two_pi(dd a) {
    double k = std::floor(a.hi / dd_two_pi.hi);
    dd r = dd_sub(a, dd_mul(dd_two_pi, k));
    while (r.hi < 0.0) r = dd_add(r, dd_two_pi);
    while (r.hi >= dd_two_pi.hi + dd_two_pi.lo) r = dd_sub(r, dd_two_pi);
    return r.hi + r.lo;
}

} // namespace cuspsum
