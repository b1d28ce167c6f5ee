#include "cuspsum/tau_table.hpp"

#include "cuspsum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace cuspsum {

namespace {

// Euler product prod (1-q^n) as a sparse polynomial: exponents are the
// generalized pentagonal numbers g_k = k(3k-1)/2, coefficients (-1)^k.
struct SparseTerm {
    std::uint64_t exponent;
    int sign;
};

std::vector<SparseTerm> pentagonal_series(std::uint64_t degree) {
    std::vector<SparseTerm> terms;
    terms.push_back({0, +1});
    for (std::uint64_t k = 1;; ++k) {
        std::uint64_t g1 = k * (3 * k - 1) / 2;
        std::uint64_t g2 = k * (3 * k + 1) / 2;
        int s = (k % 2 == 0) ? +1 : -1;
        if (g1 <= degree) terms.push_back({g1, s});
        if (g2 <= degree) terms.push_back({g2, s});
        if (g1 > degree && g2 > degree) break;
    }
    return terms;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("tau table: 128-bit coefficient overflow");
    return r;
}

} // namespace

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

CoefficientTable CoefficientTable::build(std::uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("build_tau_table: n_max must be >= 1");
    if (n_max > 1000000) throw std::invalid_argument("build_tau_table: n_max > 10^6 unsupported");

    // tau(n) is the degree-(n-1) coefficient of prod (1-q^n)^24.
    std::uint64_t degree = n_max - 1;
    auto eta = pentagonal_series(degree);

    std::vector<int128> acc(degree + 1, 0);
    for (const auto& t : eta) acc[t.exponent] = t.sign;

    std::vector<int128> next(degree + 1);
    for (int pass = 1; pass < 24; ++pass) {
        std::fill(next.begin(), next.end(), int128{0});
        for (const auto& t : eta) {
            std::uint64_t e = t.exponent;
            if (t.sign > 0) {
                for (std::uint64_t i = e; i <= degree; ++i)
                    next[i] = checked_add(next[i], acc[i - e]);
            } else {
                for (std::uint64_t i = e; i <= degree; ++i)
                    next[i] = checked_add(next[i], -acc[i - e]);
            }
        }
        acc.swap(next);
    }
    return CoefficientTable(std::move(acc));
}

CoefficientTable::CoefficientTable(std::vector<int128> tau) : tau_(std::move(tau)) {
    if (tau_.empty()) throw std::invalid_argument("CoefficientTable: empty");
}

int128 CoefficientTable::tau(std::uint64_t n) const {
    if (n < 1 || n > tau_.size())
        throw std::invalid_argument("tau: index " + std::to_string(n) + " out of range");
    return tau_[n - 1];
}

double CoefficientTable::a(std::uint64_t n) const {
    int128 t = tau(n);
    return static_cast<double>(t) * std::pow(static_cast<double>(n), -5.5);
}

double CoefficientTable::rankin_average(double x) const {
    if (x < 1.0 || x > static_cast<double>(tau_.size()))
        throw std::invalid_argument("rankin_average: x out of range");
    auto cutoff = static_cast<std::uint64_t>(std::floor(x));
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t n = 1; n <= cutoff; ++n) {
        double an = a(n);
        double y = an * an - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / x;
}

namespace {
constexpr char kMagic[4] = {'T', 'A', 'U', 'C'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

void put_i128(std::ostream& os, int128 v) {
    auto u = static_cast<unsigned __int128>(v);
    unsigned char b[16];
    for (int i = 0; i < 16; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 16);
}
} // namespace

void CoefficientTable::save(const std::filesystem::path& file) const {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw cache_error("cannot open cache for writing: " + file.string());
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u64(os, tau_.size());
    for (int128 v : tau_) put_i128(os, v);
    if (!os) throw cache_error("short write to cache: " + file.string());
}

CoefficientTable CoefficientTable::load(const std::filesystem::path& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw cache_error("cannot open cache: " + file.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw cache_error("bad magic in cache: " + file.string());
    unsigned char vb[4];
    is.read(reinterpret_cast<char*>(vb), 4);
    std::uint32_t version = 0;
    for (int i = 0; i < 4; ++i) version |= std::uint32_t(vb[i]) << (8 * i);
    if (!is || version != kVersion)
        throw cache_error("unsupported cache version in " + file.string());
    unsigned char cb[8];
    is.read(reinterpret_cast<char*>(cb), 8);
    std::uint64_t count = 0;
    for (int i = 0; i < 8; ++i) count |= std::uint64_t(cb[i]) << (8 * i);
    if (!is || count == 0 || count > 1000000)
        throw cache_error("bad count in cache: " + file.string());
    std::vector<int128> tau(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        unsigned char b[16];
        is.read(reinterpret_cast<char*>(b), 16);
        if (!is) throw cache_error("truncated cache: " + file.string());
        unsigned __int128 u = 0;
        for (int i = 0; i < 16; ++i) u |= static_cast<unsigned __int128>(b[i]) << (8 * i);
        tau[n] = static_cast<int128>(u);
    }
    if (tau[0] != 1) throw cache_error("cache does not start with tau(1)=1: " + file.string());
    return CoefficientTable(std::move(tau));
}

std::uint64_t CoefficientTable::checksum() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (int128 v : tau_) {
        auto u = static_cast<unsigned __int128>(v);
        for (int i = 0; i < 16; ++i) {
            h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(u >> (8 * i)));
            h *= 1099511628211ULL;
        }
    }
    return h;
}

} // namespace cuspsum
