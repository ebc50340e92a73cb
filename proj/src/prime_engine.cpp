#include "iterprimes/prime_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "iterprimes/errors.hpp"

namespace iterprimes {

namespace {

// Odd-only sieve up to kSmallTableLimit with per-word prefix counts, so that
// pi(x) for small x is a lookup plus one popcount.
struct SmallTable {
    std::vector<std::uint64_t> bits;    // bit i <-> odd integer 2i + 1
    std::vector<std::uint32_t> prefix;  // odd primes in words [0, w)
    std::vector<Natural> primes;        // all primes <= limit, including 2

    SmallTable()
    {
        const Natural limit = kSmallTableLimit;
        const std::uint64_t n_odd = (limit + 1) / 2;
        bits.assign((n_odd + 63) / 64, ~std::uint64_t{0});
        if (n_odd % 64)
            bits.back() &= (std::uint64_t{1} << (n_odd % 64)) - 1;
        bits[0] &= ~std::uint64_t{1};  // 1 is not prime
        for (Natural p = 3; p * p <= limit; p += 2) {
            if (!(bits[p / 2 / 64] >> (p / 2 % 64) & 1))
                continue;
            for (Natural m = p * p; m <= limit; m += 2 * p)
                bits[m / 2 / 64] &= ~(std::uint64_t{1} << (m / 2 % 64));
        }
        prefix.resize(bits.size() + 1);
        prefix[0] = 0;
        for (std::size_t w = 0; w < bits.size(); ++w)
            prefix[w + 1] = prefix[w] + static_cast<std::uint32_t>(std::popcount(bits[w]));

        primes.reserve(prefix.back() + 1);
        primes.push_back(2);
        for (std::size_t w = 0; w < bits.size(); ++w)
            for (std::uint64_t word = bits[w]; word; word &= word - 1)
                primes.push_back(2 * (w * 64 + std::countr_zero(word)) + 1);
    }

    Natural count(Natural x) const noexcept
    {
        if (x < 2)
            return 0;
        const std::uint64_t i = (x - 1) / 2;  // last odd index <= x
        const std::uint64_t w = i / 64;
        const std::uint64_t mask = (i % 64 == 63) ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << (i % 64 + 1)) - 1;
        return 1 + prefix[w] + std::popcount(bits[w] & mask);
    }
};

const SmallTable& small_table()
{
    static const SmallTable table;
    return table;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept
{
    std::uint64_t result = 1;
    base %= m;
    while (e) {
        if (e & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

// Odd primes up to `limit`. Served straight from the table when it reaches.
std::span<const Natural> odd_base_primes(Natural limit, std::vector<Natural>& storage)
{
    if (limit <= kSmallTableLimit) {
        const auto& primes = small_table().primes;
        auto end = std::upper_bound(primes.begin(), primes.end(), limit);
        return {primes.data() + 1, static_cast<std::size_t>(std::max<std::ptrdiff_t>(end - primes.begin() - 1, 0))};
    }
    storage = primes_up_to(limit);
    return std::span<const Natural>(storage).subspan(1);
}

}  // namespace

SegmentTable::SegmentTable(Natural lo, Natural hi, std::vector<std::uint64_t> odd_bits)
    : lo_(lo), hi_(hi), first_odd_(lo | 1), bits_(std::move(odd_bits))
{
}

bool SegmentTable::is_prime(Natural v) const noexcept
{
    if (v < lo_ || v > hi_)
        return false;
    if (v == 2)
        return true;
    if (v % 2 == 0)
        return false;
    const std::uint64_t i = (v - first_odd_) / 2;
    return bits_[i / 64] >> (i % 64) & 1;
}

std::uint64_t SegmentTable::count() const noexcept
{
    std::uint64_t c = (lo_ <= 2 && 2 <= hi_) ? 1 : 0;
    for (auto w : bits_)
        c += std::popcount(w);
    return c;
}

std::vector<Natural> SegmentTable::primes() const
{
    std::vector<Natural> out;
    if (lo_ <= 2 && 2 <= hi_)
        out.push_back(2);
    for (std::size_t w = 0; w < bits_.size(); ++w)
        for (std::uint64_t word = bits_[w]; word; word &= word - 1)
            out.push_back(first_odd_ + 2 * (w * 64 + std::countr_zero(word)));
    return out;
}

Natural SegmentTable::nth(std::uint64_t rank) const
{
    if (rank == 0)
        throw DomainError("segment rank is 1-based");
    if (lo_ <= 2 && 2 <= hi_) {
        if (rank == 1)
            return 2;
        --rank;
    }
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        const auto c = static_cast<std::uint64_t>(std::popcount(bits_[w]));
        if (rank > c) {
            rank -= c;
            continue;
        }
        std::uint64_t word = bits_[w];
        for (std::uint64_t r = 1; r < rank; ++r)
            word &= word - 1;
        return first_odd_ + 2 * (w * 64 + std::countr_zero(word));
    }
    throw DomainError("segment holds fewer than the requested number of primes");
}

SegmentTable sieve_segment(Natural lo, Natural hi, std::uint64_t budget_bits)
{
    if (lo > hi)
        throw InvalidRange("invalid range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
    if (lo < 2)
        throw InvalidRange("invalid range: lo must be at least 2, got " + std::to_string(lo));

    const Natural first_odd = lo | 1;
    const std::uint64_t n_odd = first_odd > hi ? 0 : (hi - first_odd) / 2 + 1;
    if (n_odd > budget_bits)
        throw SegmentTooLarge("segment [" + std::to_string(lo) + ", " + std::to_string(hi) + "] needs " +
                              std::to_string(n_odd) + " bits, budget is " + std::to_string(budget_bits));

    std::vector<std::uint64_t> bits((n_odd + 63) / 64, ~std::uint64_t{0});
    if (n_odd % 64)
        bits.back() &= (std::uint64_t{1} << (n_odd % 64)) - 1;
    if (first_odd == 1 && n_odd > 0)
        bits[0] &= ~std::uint64_t{1};

    std::vector<Natural> storage;
    for (Natural p : odd_base_primes(isqrt(hi), storage)) {
        Natural start = p * p;
        if (start < first_odd) {
            start = (first_odd + p - 1) / p * p;
            if (start % 2 == 0)
                start += p;
        }
        if (start > hi)
            continue;
        for (std::uint64_t i = (start - first_odd) / 2; i < n_odd; i += p)
            bits[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
    return SegmentTable(lo, hi, std::move(bits));
}

bool is_prime(Natural n) noexcept
{
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (auto p : kBases) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (auto a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

bool is_prime(std::string_view decimal)
{
    return is_prime(parse_natural(decimal));
}

Natural lucy_prime_count(Natural x)
{
    if (x < 2)
        return 0;
    const Natural r = isqrt(x);
    // small[v] = S(v) for v <= r; large[i] = S(x / i) for i <= r, where S(v)
    // counts integers in [2, v] not yet sieved out.
    std::vector<Natural> small(r + 1), large(r + 1);
    for (Natural v = 1; v <= r; ++v) {
        small[v] = v - 1;
        large[v] = x / v - 1;
    }
    for (Natural p = 2; p <= r; ++p) {
        if (small[p] == small[p - 1])
            continue;
        const Natural sp = small[p - 1];
        const Natural p2 = p * p;
        const Natural large_end = std::min(r, x / p2);
        const Natural direct_end = std::min(large_end, r / p);
        for (Natural i = 1; i <= direct_end; ++i)
            large[i] -= large[i * p] - sp;
        for (Natural i = direct_end + 1; i <= large_end; ++i)
            large[i] -= small[x / (i * p)] - sp;
        for (Natural v = r; v >= p2; --v)
            small[v] -= small[v / p] - sp;
    }
    return large[1];
}

Natural prime_count(Natural x)
{
    if (x <= kSmallTableLimit)
        return small_table().count(x);
    return lucy_prime_count(x);
}

std::vector<Natural> primes_up_to(Natural limit)
{
    if (limit <= kSmallTableLimit) {
        const auto& primes = small_table().primes;
        return {primes.begin(), std::upper_bound(primes.begin(), primes.end(), limit)};
    }
    std::vector<Natural> out = small_table().primes;
    constexpr Natural kChunk = Natural{1} << 24;
    for (Natural lo = kSmallTableLimit + 1; lo <= limit;) {
        const Natural hi = (limit - lo < kChunk) ? limit : lo + kChunk - 1;
        auto seg = sieve_segment(lo, hi).primes();
        out.insert(out.end(), seg.begin(), seg.end());
        if (hi == limit)
            break;
        lo = hi + 1;
    }
    return out;
}

Natural nth_prime(Natural n, const NthPrimeOptions& options)
{
    if (n == 0)
        throw DomainError("nth_prime: index must be at least 1");
    if (n == 1)
        return 2;
    if (n == 2)
        return 3;

    // n log n < p_n < 2 n log n for n >= 3; pad by two to absorb rounding.
    const long double n_log_n = static_cast<long double>(n) * std::log(static_cast<long double>(n));
    if (n_log_n >= static_cast<long double>(options.max_value))
        throw BudgetExceeded("nth_prime(" + std::to_string(n) + ") exceeds the value budget " +
                             std::to_string(options.max_value));
    Natural lo = static_cast<Natural>(n_log_n);
    lo = lo > 4 ? lo - 2 : 2;
    Natural hi = static_cast<Natural>(std::ceil(2 * n_log_n)) + 2;

    const std::uint64_t max_window = std::max<std::uint64_t>(2 * options.segment_bits, 4) - 2;
    const Natural window = std::min<Natural>(std::max<Natural>(hi >> 10, 256), max_window);

    // Invariant: pi(lo) < n <= pi(hi).
    Natural pi_lo = prime_count(lo);
    while (hi - lo > window) {
        const Natural mid = lo + (hi - lo) / 2;
        const Natural c = prime_count(mid);
        if (c >= n) {
            hi = mid;
        } else {
            lo = mid;
            pi_lo = c;
        }
    }
    const Natural p = sieve_segment(lo + 1, hi, options.segment_bits).nth(n - pi_lo);
    if (p > options.max_value)
        throw BudgetExceeded("nth_prime(" + std::to_string(n) + ") = " + std::to_string(p) +
                             " exceeds the value budget " + std::to_string(options.max_value));
    return p;
}

}  // namespace iterprimes
