#include "iterprimes/bounds.hpp"

#include <algorithm>
#include <string>

#include "iterprimes/errors.hpp"

namespace iterprimes {

std::string_view bound_name(BoundKind kind) noexcept
{
    switch (kind) {
    case BoundKind::RosserLower:
        return "rosser_lower";
    case BoundKind::RosserUpper:
        return "rosser_upper";
    case BoundKind::FactorialUpper:
        return "factorial_upper";
    case BoundKind::PowerUpper:
        return "power_upper";
    case BoundKind::LogPowerLower:
        return "log_power_lower";
    case BoundKind::LargeIndexLower:
        return "large_index_lower";
    }
    return "unknown";
}

namespace {

HPReal n_log_n(Natural n, unsigned digits)
{
    const HPReal x(n, digits);
    return x * log(x);
}

}  // namespace

RosserBracket rosser_bracket(Natural n, unsigned digits)
{
    if (n <= 1)
        throw InapplicableIndex("n log n < p_n < 2 n log n needs n >= 2 (n >= 3 for the upper side), got n = " +
                                std::to_string(n));
    HPReal lower = n_log_n(n, digits);
    if (n == 2)
        return {std::move(lower), std::nullopt};
    HPReal upper = HPReal(std::uint64_t{2}, digits) * lower;
    return {std::move(lower), std::move(upper)};
}

HPReal upper_bound_factorial(Natural n, Natural k, unsigned digits)
{
    if (n < 9)
        throw InapplicableIndex("factorial upper bound needs n >= 9, got n = " + std::to_string(n));
    if (k == 0)
        throw DomainError("factorial upper bound needs k >= 1");
    const HPReal two(std::uint64_t{2}, digits);
    return pow(two, 2 * k - 1) * HPReal(n, digits) * factorial(k - 1, digits) *
           pow(log(HPReal(std::max(k, n), digits)), k);
}

HPReal upper_bound_power(Natural k, unsigned digits)
{
    if (k < 2)
        throw DomainError("(4 k log k)^k needs k >= 2, got k = " + std::to_string(k));
    const HPReal kk(k, digits);
    return pow(HPReal(std::uint64_t{4}, digits) * kk * log(kk), k);
}

HPReal lower_bound_log_power(Natural n, Natural k, unsigned digits)
{
    if (n < 2)
        throw InapplicableIndex("n (log n)^k needs n >= 2, got n = " + std::to_string(n));
    const HPReal x(n, digits);
    return x * pow(log(x), k);
}

LogMagnitude lower_bound_large_index(const HPReal& log_n, Natural k)
{
    const unsigned digits = log_n.digits();
    if (log_n.compare(kLargeIndexLogThreshold) <= 0)
        throw HypothesisViolated("large-index lower bound needs log n > 4200, got log n = " + log_n.to_string(20));
    if (HPReal(k, digits) < floor(log_n))
        throw HypothesisViolated("large-index lower bound needs k >= floor(log n) = " + floor(log_n).to_string(30) +
                                 ", got k = " + std::to_string(k));
    const HPReal kk(k, digits);
    const HPReal log_k = log(kk);
    // log of (e k log k / log log n)^k, expanded termwise
    HPReal per_level = HPReal(std::uint64_t{1}, digits) + log_k + log(log_k) - log(log(log_n));
    return {kk * per_level};
}

BoundReport check_bounds(Natural n, Natural k, Natural value, unsigned digits)
{
    BoundReport report{n, k, value, {}};
    auto exact = [value](unsigned d) { return HPReal(value, d); };

    auto add = [&](BoundKind kind, bool applicable, auto&& lhs_at, auto&& rhs_at) {
        BoundCheck check{kind, applicable, std::nullopt, std::nullopt, std::nullopt};
        if (applicable) {
            auto cmp = strictly_less(lhs_at, rhs_at, digits);
            check.lhs = cmp.lhs.with_digits(digits);
            check.rhs = cmp.rhs.with_digits(digits);
            check.holds = cmp.holds;
        }
        report.checks.push_back(std::move(check));
    };

    add(BoundKind::RosserLower, k == 1 && n >= 2, [n](unsigned d) { return n_log_n(n, d); }, exact);
    add(BoundKind::RosserUpper, k == 1 && n >= 3, exact,
        [n](unsigned d) { return HPReal(std::uint64_t{2}, d) * n_log_n(n, d); });
    add(BoundKind::FactorialUpper, n >= 9 && k >= 1, exact,
        [n, k](unsigned d) { return upper_bound_factorial(n, k, d); });
    add(BoundKind::PowerUpper, n >= 9 && k >= n, exact, [k](unsigned d) { return upper_bound_power(k, d); });
    add(BoundKind::LogPowerLower, n >= 2, [n, k](unsigned d) { return lower_bound_log_power(n, k, d); }, exact);
    // log n <= log(2^64) < 45, far below the 4200 threshold.
    add(BoundKind::LargeIndexLower, false, exact, exact);
    return report;
}

HPReal log_growth_residual(Natural k, Natural value, unsigned digits)
{
    if (k < 3)
        throw DomainError("log-growth residual needs k >= 3 (log log k > 0), got k = " + std::to_string(k));
    if (value < 2)
        throw DomainError("log-growth residual needs a prime value");
    const HPReal kk(k, digits);
    const HPReal log_k = log(kk);
    return log(HPReal(value, digits)) / kk - log_k - log(log_k);
}

void write_bound_csv_header(std::ostream& out)
{
    out << "n,k,value,bound,lhs,rhs,applicable,holds\n";
}

void write_bound_csv(std::ostream& out, const BoundReport& report, int sig_digits)
{
    for (const auto& c : report.checks) {
        out << report.n << ',' << report.k << ',' << report.value << ',' << bound_name(c.kind) << ','
            << (c.lhs ? c.lhs->to_string(sig_digits) : "") << ','
            << (c.rhs ? c.rhs->to_string(sig_digits) : "") << ','
            << (c.applicable ? "true" : "false") << ','
            << (c.holds ? (*c.holds ? "true" : "false") : "") << '\n';
    }
}

}  // namespace iterprimes
