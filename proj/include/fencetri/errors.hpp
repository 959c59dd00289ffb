#pragma once

#include <stdexcept>
#include <string>

namespace fencetri {

/// Thrown when a request exceeds a hard enumeration/brute-force guard.
/// The CLI maps this to exit status 3.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a series-backed computation needs a higher truncation order
/// than the caller supplied. Rebuild the series with a larger order.
class order_error : public std::logic_error {
public:
    explicit order_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace fencetri
