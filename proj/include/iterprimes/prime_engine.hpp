#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "iterprimes/natural.hpp"

namespace iterprimes {

/// Default sieve segment budget: 2^26 bits, one bit per odd integer.
inline constexpr std::uint64_t kDefaultSegmentBits = std::uint64_t{1} << 26;

/// prime_count below this limit is answered from a precomputed table.
inline constexpr Natural kSmallTableLimit = Natural{1} << 22;

/// Default ceiling on the value nth_prime is allowed to search for.
inline constexpr Natural kDefaultNthPrimeLimit = 10'000'000'000'000ULL;

/// Primality flags for the closed interval [lo, hi].
///
/// Stores one bit per odd integer; 2 is tracked separately.
class SegmentTable {
public:
    SegmentTable(Natural lo, Natural hi, std::vector<std::uint64_t> odd_bits);

    Natural lo() const noexcept { return lo_; }
    Natural hi() const noexcept { return hi_; }

    bool is_prime(Natural v) const noexcept;
    /// Number of primes in [lo, hi].
    std::uint64_t count() const noexcept;
    /// Primes in [lo, hi], ascending.
    std::vector<Natural> primes() const;
    /// The `rank`-th prime (1-based) inside the segment.
    Natural nth(std::uint64_t rank) const;

private:
    Natural lo_;
    Natural hi_;
    Natural first_odd_;  // odd integer represented by bit 0
    std::vector<std::uint64_t> bits_;
};

/// Sieves [lo, hi]. Requires 2 <= lo <= hi and at most `budget_bits` odd
/// integers in the interval.
SegmentTable sieve_segment(Natural lo, Natural hi,
                           std::uint64_t budget_bits = kDefaultSegmentBits);

/// Deterministic for every 64-bit input (strong-probable-prime test over the
/// first twelve prime bases).
bool is_prime(Natural n) noexcept;

/// Decimal overload; throws OutOfSupportedRange above 2^64 - 1.
bool is_prime(std::string_view decimal);

/// pi(x): the number of primes <= x.
Natural prime_count(Natural x);

/// pi(x) by the combinatorial recurrence over the distinct values floor(x/d),
/// O(x^(3/4)) time and O(sqrt x) memory. prime_count dispatches here above
/// the small table.
Natural lucy_prime_count(Natural x);

/// Primes up to `limit`, ascending (served from the small table when possible).
std::vector<Natural> primes_up_to(Natural limit);

struct NthPrimeOptions {
    std::uint64_t segment_bits = kDefaultSegmentBits;
    /// Largest prime value the search may reach; BudgetExceeded beyond it.
    Natural max_value = kDefaultNthPrimeLimit;
};

/// p_n, the n-th prime (n >= 1).
///
/// For n >= 3 the search starts from the window n log n < p_n < 2 n log n,
/// narrows it by bisection on prime_count and finishes with one sieve segment.
Natural nth_prime(Natural n, const NthPrimeOptions& options = {});

}  // namespace iterprimes
