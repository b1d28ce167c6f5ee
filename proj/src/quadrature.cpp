#include "cuspsum/quadrature.hpp"

#include <numbers>

namespace cuspsum {

GaussLegendre16::GaussLegendre16() {
    constexpr int n = 16;
    for (int i = 0; i < n / 2; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / double(j);
                p0 = p1;
                p1 = p2;
            }
            dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[std::size_t(i)] = -x;
        nodes[std::size_t(n - 1 - i)] = x;
        weights[std::size_t(i)] = w;
        weights[std::size_t(n - 1 - i)] = w;
    }
}

const GaussLegendre16& GaussLegendre16::get() {
    static const GaussLegendre16 instance;
    return instance;
}

} // namespace cuspsum
