#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cuspsum {

// Rational twist e(hn/k) with gcd(h,k)=1, cached modular inverse and
// precomputed k-th roots of unity.
class RationalTwist {
public:
    RationalTwist(std::int64_t h, std::int64_t k);

    std::int64_t h() const { return h_; }
    std::int64_t k() const { return k_; }
    std::int64_t h_bar() const { return h_bar_; }

    // e(h n / k)
    std::complex<double> e_hn(std::uint64_t n) const {
        return roots_[(n % std::uint64_t(k_)) * h_mod_ % std::uint64_t(k_)];
    }

    // e(-h_bar n / k), the dual twist in the Voronoi main term
    std::complex<double> e_minus_hbar_n(std::uint64_t n) const {
        std::uint64_t r = (n % std::uint64_t(k_)) * std::uint64_t(h_bar_) % std::uint64_t(k_);
        return std::conj(roots_[r]);
    }

    std::complex<double> root(std::uint64_t j) const { return roots_[j % std::uint64_t(k_)]; }

private:
    std::int64_t h_;
    std::int64_t k_;
    std::int64_t h_bar_; // 0 when k == 1
    std::uint64_t h_mod_;
    std::vector<std::complex<double>> roots_;
};

} // namespace cuspsum
