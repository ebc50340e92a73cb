#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "iterprimes/hpreal.hpp"
#include "iterprimes/iterated.hpp"
#include "iterprimes/natural.hpp"

namespace iterprimes {

/// One row of a counting-function table.
struct CountRecord {
    Natural x = 0;
    Natural diag_count = 0;
    std::map<Natural, Natural> tower_counts;  ///< base index n -> #{k : p_n^(k) <= x}
    std::optional<HPReal> comparator;        ///< log x / log log x, present for x >= 16
};

/// Number of k with p_k^(k) <= x.
///
/// Needs the first diagonal element above x to certify the count; that
/// element is only bracketed (never computed past x), so the cost is bounded
/// by pi(x). Throws BudgetExceeded when x exceeds the budget.
Natural count_diag(IteratedPrimes& primes, Natural x);

/// Number of k with p_n^(k) <= x.
Natural count_tower(IteratedPrimes& primes, Natural n, Natural x);

/// Smallest x accepted by comparator.
inline constexpr Natural kComparatorMinX = 16;

/// log x / log log x. Throws DomainError for x < 16.
HPReal comparator(Natural x, unsigned digits = kDefaultDigits);

/// One CountRecord per x. `xs` must be ascending.
std::vector<CountRecord> ratio_series(IteratedPrimes& primes, std::span<const Natural> xs,
                                      std::span<const Natural> ns,
                                      unsigned digits = kDefaultDigits);

/// CSV `x,diag_count,tower_n,tower_count,comparator`, one row per (x, n);
/// a record with no tower counts yields one row with empty tower fields.
void write_count_csv(std::ostream& out, std::span<const CountRecord> records, int comparator_digits);

}  // namespace iterprimes
