#include "iterprimes/counting.hpp"

#include <algorithm>
#include <string>

#include "iterprimes/errors.hpp"

namespace iterprimes {

Natural count_diag(IteratedPrimes& primes, Natural x)
{
    if (x > primes.budget())
        throw BudgetExceeded("count_diag(" + std::to_string(x) + ") needs values above the budget " +
                             std::to_string(primes.budget()));
    // p_k^(k) is strictly increasing in k, so stop at the first one above x.
    Natural k = 0;
    while (true) {
        const Natural next = k + 1;
        if (primes.iterate_within({next, next}, x).truncated)
            return k;
        k = next;
    }
}

Natural count_tower(IteratedPrimes& primes, Natural n, Natural x)
{
    if (n == 0)
        throw DomainError("tower base index must be at least 1");
    if (x > primes.budget())
        throw BudgetExceeded("count_tower(" + std::to_string(n) + ", " + std::to_string(x) +
                             ") needs values above the budget " + std::to_string(primes.budget()));
    // Depth grows one level at a time; cached levels make the rescans cheap.
    Natural depth = 1;
    while (true) {
        Tower t = primes.iterate_within({n, depth}, x);
        if (t.truncated)
            return t.depth();
        depth *= 2;
    }
}

HPReal comparator(Natural x, unsigned digits)
{
    if (x < kComparatorMinX)
        throw DomainError("comparator requires x >= 16, got " + std::to_string(x));
    const HPReal log_x = log(HPReal(x, digits));
    return log_x / log(log_x);
}

std::vector<CountRecord> ratio_series(IteratedPrimes& primes, std::span<const Natural> xs,
                                      std::span<const Natural> ns, unsigned digits)
{
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw DomainError("ratio_series: xs must be sorted ascending");
    std::vector<CountRecord> out;
    out.reserve(xs.size());
    for (Natural x : xs) {
        CountRecord rec;
        rec.x = x;
        rec.diag_count = count_diag(primes, x);
        for (Natural n : ns)
            rec.tower_counts[n] = count_tower(primes, n, x);
        if (x >= kComparatorMinX)
            rec.comparator = comparator(x, digits);
        out.push_back(std::move(rec));
    }
    return out;
}

void write_count_csv(std::ostream& out, std::span<const CountRecord> records, int comparator_digits)
{
    out << "x,diag_count,tower_n,tower_count,comparator\n";
    for (const auto& rec : records) {
        const std::string comp = rec.comparator ? rec.comparator->to_string(comparator_digits) : "";
        if (rec.tower_counts.empty()) {
            out << rec.x << ',' << rec.diag_count << ",,," << comp << '\n';
            continue;
        }
        for (const auto& [n, count] : rec.tower_counts)
            out << rec.x << ',' << rec.diag_count << ',' << n << ',' << count << ',' << comp << '\n';
    }
}

}  // namespace iterprimes
