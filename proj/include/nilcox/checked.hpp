#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilcox {

/// Coefficient and window-entry type. All arithmetic on coefficients is
/// overflow-checked: a computation that would wrap throws instead of
/// silently producing a wrong value.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// Thrown when an enumeration would exceed a configured resource bound
/// (element count, path count).  The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
  public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nilcox
