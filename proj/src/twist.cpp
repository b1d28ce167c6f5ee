#include "cuspsum/twist.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cuspsum {

namespace {

// Inverse of a mod k by the extended Euclidean algorithm; requires gcd(a,k)=1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t k) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = k, new_r = a % k;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return ((t % k) + k) % k;
}

} // namespace

RationalTwist::RationalTwist(std::int64_t h, std::int64_t k) : h_(h), k_(k) {
    if (k < 1) throw std::invalid_argument("RationalTwist: k must be >= 1");
    if (h < 0) throw std::invalid_argument("RationalTwist: h must be >= 0");
    if (std::gcd(h, k) != 1)
        throw std::invalid_argument("RationalTwist: gcd(h,k) = " +
                                    std::to_string(std::gcd(h, k)) + " != 1");
    h_mod_ = std::uint64_t(h % k);
    h_bar_ = (k == 1) ? 0 : mod_inverse(h % k, k);
    roots_.resize(std::size_t(k));
    for (std::int64_t j = 0; j < k; ++j)
        roots_[std::size_t(j)] =
            std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(k));
}

} // namespace cuspsum
