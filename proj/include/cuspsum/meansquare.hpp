#pragma once

#include "cuspsum/bump_weight.hpp"
#include "cuspsum/sums.hpp"
#include "cuspsum/tau_table.hpp"
#include "cuspsum/twist.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cuspsum {

// One mean-square run: window length T ~ M^delta_exp over x in [M, M+delta].
struct ExperimentConfig {
    double m = 10000.0;       // left endpoint M
    double delta_exp = 0.6;   // delta in (1/2, 1); T = M^delta unless overridden
    std::int64_t h = 1;
    std::int64_t k = 1;
    double eps = 0.05;
    double ramp_fraction = 0.25;
    double quad_tol = 1e-9;
    double constant_multiplier = 1.0; // knob for every implied constant
    std::optional<double> big_t_override;
    std::optional<double> delta_override;

    double big_t() const;   // T
    double delta() const;   // support length, min(k^2 M^{1/2+eps}, M) by default
    // Throws std::invalid_argument on violated invariants; returns a warning
    // string when k > M^{0.4} (still valid below M^{0.45}).
    std::string validate(const CoefficientTable& table) const;
};

struct ErrorBudget {
    double voronoi_term = 0.0; // k^2 M^{1+eps}
    double diagonal_term = 0.0; // delta M^eps T^{1/2} k
    double cross_term = 0.0;   // sqrt(S * (sum of the two))
    double total = 0.0;
};

struct CorollaryBounds {
    double bound_small_k = 0.0; // delta M^{1/2+eps} k
    double bound_mid_k = 0.0;   // delta T M^eps
    double bound_large_k = 0.0; // delta M^eps k^2
    int regime = 0;             // 1, 2, or 3
    bool boundary = false;      // k within a factor 2 of a regime threshold
    double applicable = 0.0;    // the regime's bound
    double corollary3 = 0.0;    // min(delta T M^eps, delta M^{1/2+eps} k) + k^2 M^{1+eps}
};

struct MeanSquareReport {
    double lhs = 0.0;
    double main_term_s = 0.0;
    double split = 0.0;
    ErrorBudget budget;
    CorollaryBounds corollary;
    double ratio = 0.0; // lhs / S (0 when S == 0)
    std::uint64_t breakpoint_count = 0;
    double runtime_seconds = 0.0;
};

struct LhsResult {
    double value = 0.0;
    std::uint64_t piece_count = 0;
};

// Exact LHS: the inner sum is a step function of x with jumps only at
// integers and at integers - T; each piece integrates w alone.
LhsResult lhs_exact(const ExperimentConfig& config, const CoefficientTable& table);

// M' = min(M^2 T^{-2}, M^2 T^{-1} delta^{-1}).
double split_point(const ExperimentConfig& config);

// The diagonal main term S of the mean square.
double main_term_S(const ExperimentConfig& config, const CoefficientTable& table);

// |(cos A - cos B)^2 - 4 sin^2((A-B)/2) sin^2((A+B)/2)| with
// A = 4 pi sqrt(n(x+T))/k - pi/4, B = 4 pi sqrt(nx)/k - pi/4.
double diagonal_identity_check(std::uint64_t n, double x, double big_t, std::int64_t k);

ErrorBudget error_budget(const ExperimentConfig& config, double s_value);

CorollaryBounds corollary_bound(const ExperimentConfig& config);

MeanSquareReport run_experiment(const ExperimentConfig& config,
                                const CoefficientTable& table);

} // namespace cuspsum
