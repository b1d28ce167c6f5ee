#pragma once

#include "cuspsum/errors.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace cuspsum {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on the Legendre polynomial.
struct GaussLegendre16 {
    std::array<double, 16> nodes{};
    std::array<double, 16> weights{};
    GaussLegendre16();
    static const GaussLegendre16& get();
};

// Composite GL-16 over [a, b] with uniform panels of length <= max_panel.
// Throws resource_limit_error when more than panel_cap panels would be needed.
template <class F>
auto panel_integrate(F&& f, double a, double b, double max_panel,
                     std::uint64_t panel_cap = 4'000'000)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    if (b <= a) return R{};
    double len = b - a;
    auto panels = std::uint64_t(std::ceil(len / max_panel));
    if (panels == 0) panels = 1;
    if (panels > panel_cap)
        throw resource_limit_error("panel_integrate: " + std::to_string(panels) +
                                   " panels exceed cap " + std::to_string(panel_cap));
    const auto& gl = GaussLegendre16::get();
    double h = len / double(panels);
    R total{};
    R comp{};
    for (std::uint64_t p = 0; p < panels; ++p) {
        double lo = a + h * double(p);
        double mid = lo + 0.5 * h;
        double half = 0.5 * h;
        R acc{};
        for (int i = 0; i < 16; ++i)
            acc += gl.weights[std::size_t(i)] * f(mid + half * gl.nodes[std::size_t(i)]);
        R v = acc * half;
        R y = v - comp;
        R t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    return total;
}

} // namespace cuspsum
