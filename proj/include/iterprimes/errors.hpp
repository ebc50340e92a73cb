#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iterprimes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed interval: lo > hi, or lo below 2 for a sieve.
class InvalidRange : public Error {
public:
    using Error::Error;
};

/// A sieve segment would exceed the configured bit budget.
class SegmentTooLarge : public Error {
public:
    using Error::Error;
};

/// Input outside the range where results are guaranteed exact (above 2^64 - 1).
class OutOfSupportedRange : public Error {
public:
    using Error::Error;
};

/// Argument outside a function's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A bound formula was requested for an index its hypothesis excludes.
class InapplicableIndex : public Error {
public:
    using Error::Error;
};

/// The hypothesis of a bound (for example log n > 4200) does not hold.
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

/// A required value lies above the configured compute budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t deepest_level = 0)
        : Error(what), deepest_level_(deepest_level) {}

    /// Deepest tower level that was completed before the budget stopped work.
    std::uint64_t deepest_level() const noexcept { return deepest_level_; }

private:
    std::uint64_t deepest_level_;
};

/// A line of the tower cache file could not be parsed or contradicts another.
class CacheFormatError : public Error {
public:
    using Error::Error;
};

/// A sampled point at or above 4200 fell below the threshold.
class ThresholdViolated : public Error {
public:
    using Error::Error;
};

}  // namespace iterprimes
