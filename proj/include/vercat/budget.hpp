#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vercat {

/// Resource limit for dense computations: the largest number of matrix
/// entries any single step may allocate.
struct Budget {
    std::size_t max_entries = std::size_t{1} << 20;

    void require(std::size_t entries, const std::string& what) const;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments that the caller could have checked (out-of-range
/// parameters, mismatched primes, malformed inclusions).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void Budget::require(std::size_t entries, const std::string& what) const
{
    if (entries > max_entries)
        throw BudgetExceeded(what + " needs " + std::to_string(entries) + " matrix entries (budget " +
                             std::to_string(max_entries) + ")");
}

} // namespace vercat
