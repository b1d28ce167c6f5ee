#pragma once

#include <stdexcept>
#include <string>

namespace cuspsum {

// Quadrature or table construction exceeded a configured resource cap.
// Mapped to exit code 4 by the CLI.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Cache file is missing, truncated, or has a bad magic/version.
// Mapped to exit code 2 by the CLI.
struct cache_error : std::runtime_error {
    explicit cache_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace cuspsum
