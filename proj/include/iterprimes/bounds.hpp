#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "iterprimes/hpreal.hpp"
#include "iterprimes/natural.hpp"

namespace iterprimes {

/// Explicit inequalities that iterated primes p_n^(k) satisfy.
enum class BoundKind {
    RosserLower,      ///< n log n < p_n, n >= 2
    RosserUpper,      ///< p_n < 2 n log n, n >= 3
    FactorialUpper,   ///< p_n^(k) < 2^(2k-1) n (k-1)! (log max(k, n))^k, n >= 9
    PowerUpper,       ///< p_n^(k) < (4 k log k)^k, k >= n >= 9
    LogPowerLower,    ///< p_n^(k) > n (log n)^k, n >= 2
    LargeIndexLower,  ///< p_n^(k) > (e k log k / log log n)^k, log n > 4200
};

std::string_view bound_name(BoundKind kind) noexcept;

struct RosserBracket {
    HPReal lower;                ///< n log n
    std::optional<HPReal> upper; ///< 2 n log n, absent for n = 2
};

/// Throws InapplicableIndex for n <= 1.
RosserBracket rosser_bracket(Natural n, unsigned digits = kDefaultDigits);

/// 2^(2k-1) * n * (k-1)! * (log max(k, n))^k. Requires n >= 9, k >= 1.
HPReal upper_bound_factorial(Natural n, Natural k, unsigned digits = kDefaultDigits);

/// (4 k log k)^k. Requires k >= 2.
HPReal upper_bound_power(Natural k, unsigned digits = kDefaultDigits);

/// n (log n)^k. Requires n >= 2.
HPReal lower_bound_log_power(Natural n, Natural k, unsigned digits = kDefaultDigits);

/// (e k log k / log log n)^k, parameterized by log n so that n itself is
/// never formed. Requires log_n > 4200 and k >= floor(log_n); throws
/// HypothesisViolated otherwise.
LogMagnitude lower_bound_large_index(const HPReal& log_n, Natural k);

/// Threshold on log n for lower_bound_large_index.
inline constexpr std::uint64_t kLargeIndexLogThreshold = 4200;

struct BoundCheck {
    BoundKind kind;
    bool applicable = false;
    std::optional<HPReal> lhs;  ///< claimed smaller side
    std::optional<HPReal> rhs;  ///< claimed larger side
    std::optional<bool> holds;  ///< lhs < rhs; set only when applicable
};

struct BoundReport {
    Natural n = 0;
    Natural k = 0;
    Natural value = 0;
    std::vector<BoundCheck> checks;
};

/// Outcome of a strict comparison lhs < rhs decided with precision escalation.
struct StrictComparison {
    bool holds;
    HPReal lhs;
    HPReal rhs;
    unsigned digits_used;
};

/// Evaluates both sides at `digits`; while they agree to within the last
/// couple of digits, doubles the precision and retries (up to 16x). An
/// unresolved tie counts as not strictly less.
template <typename Lhs, typename Rhs>
StrictComparison strictly_less(Lhs&& lhs_at, Rhs&& rhs_at, unsigned digits);

/// Every bound in BoundKind, each flagged applicable or not under its own
/// hypothesis. Inapplicable checks are not evaluated.
BoundReport check_bounds(Natural n, Natural k, Natural value, unsigned digits = kDefaultDigits);

/// log(value)/k - log k - log log k: the bracket the log-growth asymptotics
/// say stays bounded. Requires k >= 3.
HPReal log_growth_residual(Natural k, Natural value, unsigned digits = kDefaultDigits);

/// CSV `n,k,value,bound,lhs,rhs,applicable,holds`.
void write_bound_csv_header(std::ostream& out);
void write_bound_csv(std::ostream& out, const BoundReport& report, int sig_digits);

// ---------------------------------------------------------------------------

template <typename Lhs, typename Rhs>
StrictComparison strictly_less(Lhs&& lhs_at, Rhs&& rhs_at, unsigned digits)
{
    const unsigned cap = digits * 16;
    for (unsigned d = digits;; d *= 2) {
        HPReal lhs = lhs_at(d);
        HPReal rhs = rhs_at(d);
        HPReal gap = abs(rhs - lhs);
        HPReal scale = abs(lhs) < abs(rhs) ? abs(rhs) : abs(lhs);
        // Decided once the gap is clear of the last two digits.
        HPReal tolerance = scale * pow(HPReal(0.1, d), static_cast<std::uint64_t>(d - 2));
        if (gap > tolerance || d * 2 > cap)
            return {gap > tolerance && lhs < rhs, std::move(lhs), std::move(rhs), d};
    }
}

}  // namespace iterprimes
