#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace cuspsum {

using int128 = __int128;

std::string int128_to_string(int128 v);

// Exact Fourier coefficients tau(n) of the weight-12 discriminant form,
// q * prod_{n>=1} (1-q^n)^24, together with the normalized a(n) = tau(n) n^{-11/2}.
// Immutable after construction; safe to share across threads.
class CoefficientTable {
public:
    static constexpr int kKappa = 12;

    // Expands the eta product to degree n_max by 24 sequential exact series
    // multiplications. All arithmetic is checked 128-bit; overflow throws.
    static CoefficientTable build(std::uint64_t n_max);

    explicit CoefficientTable(std::vector<int128> tau);

    std::uint64_t n_max() const { return tau_.size(); }

    // 1-based, exact.
    int128 tau(std::uint64_t n) const;

    // a(n) = tau(n) * n^{-11/2} as a double.
    double a(std::uint64_t n) const;

    // x^{-1} * sum_{n <= x} |a(n)|^2  (Rankin-Selberg partial average).
    double rankin_average(double x) const;

    // "TAUC" binary cache: magic, u32 version=1, u64 count, count x 16-byte
    // little-endian signed integers.
    void save(const std::filesystem::path& file) const;
    static CoefficientTable load(const std::filesystem::path& file);

    // FNV-1a over the serialized coefficient bytes.
    std::uint64_t checksum() const;

private:
    std::vector<int128> tau_;
};

} // namespace cuspsum
