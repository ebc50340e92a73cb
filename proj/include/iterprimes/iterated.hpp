#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "iterprimes/hpreal.hpp"
#include "iterprimes/natural.hpp"
#include "iterprimes/prime_engine.hpp"

namespace iterprimes {

/// Default largest prime value a tower may reach.
inline constexpr Natural kDefaultBudget = 100'000'000'000ULL;

struct TowerSpec {
    Natural n;  ///< base index, >= 1
    Natural k;  ///< depth, >= 1
};

/// p_n^(1), ..., p_n^(j) for a fixed base index n.
///
/// `values[j-1]` is the j-fold iterated prime. When the budget stops the
/// computation before the requested depth, `truncated` is set and `values`
/// holds the levels that fit.
struct Tower {
    Natural n = 0;
    Natural requested_depth = 0;
    std::vector<Natural> values;
    bool truncated = false;

    Natural depth() const noexcept { return values.size(); }
    Natural top() const { return values.back(); }
};

struct DiagEntry {
    Natural k;
    Natural value;  ///< p_k^(k)
};

struct RatioEntry {
    Natural k;
    Natural numerator;    ///< p_n^(k)
    Natural denominator;  ///< p_k^(k)
    HPReal ratio;
};

/// Persistent store of tower levels, one `T <n> <level> <value>` line each.
///
/// Loaded in full on construction; new records are appended and flushed.
/// Reads take a shared lock, writes an exclusive one.
class TowerCache {
public:
    /// In-memory only.
    TowerCache() = default;
    /// Loads `path` if it exists (throws CacheFormatError on any bad line)
    /// and appends new records to it.
    explicit TowerCache(std::filesystem::path path);

    std::optional<Natural> find(Natural n, Natural level) const;
    void store(Natural n, Natural level, Natural value);

    std::size_t size() const;
    /// All records ordered by (n, level).
    std::vector<std::pair<std::pair<Natural, Natural>, Natural>> records() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<Natural, Natural>, Natural> records_;
    std::optional<std::filesystem::path> path_;
    std::ofstream out_;
};

/// Iterated primes p_n^(k) under a value budget, memoized in a TowerCache.
class IteratedPrimes {
public:
    IteratedPrimes(TowerCache& cache, Natural budget = kDefaultBudget,
                   NthPrimeOptions engine = {});

    Natural budget() const noexcept { return budget_; }
    TowerCache& cache() noexcept { return cache_; }

    /// Tower up to spec.k levels, truncated (and marked) at the last level
    /// whose value fits the budget. Throws BudgetExceeded when even p_n does
    /// not fit.
    Tower iterate(const TowerSpec& spec);

    /// Like iterate, but with an additional value ceiling `limit` and no
    /// throw: an empty, truncated tower means p_n > min(limit, budget).
    Tower iterate_within(const TowerSpec& spec, Natural limit);

    /// p_k^(k). Throws BudgetExceeded naming the deepest completed level.
    DiagEntry diag(Natural k);

    /// p_n^(k) / p_k^(k) for k = 1..k_max, stopping at the first k where
    /// either side exceeds the budget (BudgetExceeded if that is k = 1).
    std::vector<RatioEntry> ratio_to_diagonal(Natural n, Natural k_max,
                                              unsigned digits = kDefaultDigits);

private:
    Natural prime_count_at(Natural limit);
    Natural prime_at(Natural index);

    TowerCache& cache_;
    Natural budget_;
    NthPrimeOptions engine_;
    std::mutex pi_mutex_;
    std::map<Natural, Natural> pi_memo_;
};

}  // namespace iterprimes
