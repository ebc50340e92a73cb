// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "iterprimes/bounds.hpp"
#include "iterprimes/certify.hpp"
#include "iterprimes/counting.hpp"
#include "iterprimes/iterated.hpp"
#include "iterprimes/prime_engine.hpp"
#include "../oracles.hpp"

using namespace iterprimes;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] %-3s %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

const std::vector<std::uint64_t>& reference_primes()
{
    static const auto primes = oracle::primes_up_to(3'000'000);
    return primes;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

int main()
{
    TowerCache cache;

    criterion("1", "prime_count equals the full-sieve count at 10^3..10^7", [] {
        const auto start = Clock::now();
        const auto flags = oracle::sieve_flags(10'000'000);
        std::uint64_t count = 0, x = 1000;
        std::ostringstream detail;
        bool ok = true;
        for (std::uint64_t v = 0; v <= 10'000'000; ++v) {
            count += flags[v];
            if (v == x) {
                const bool match = prime_count(x) == count && lucy_prime_count(x) == count;
                ok = ok && match;
                detail << "pi(" << x << ")=" << count << (match ? " " : "(MISMATCH) ");
                x *= 10;
            }
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        return Outcome{ok && secs <= 60.0, detail.str()};
    });

    criterion("2", "nth_prime matches the sieve list for n <= 10^5, strictly inside n log n .. 2n log n", [] {
        const auto& primes = reference_primes();
        std::uint64_t mismatches = 0, outside = 0;
        for (std::uint64_t n = 1; n <= 100'000; ++n) {
            const Natural p = nth_prime(n);
            if (p != primes[n - 1])
                ++mismatches;
            if (n >= 3) {
                const RosserBracket b = rosser_bracket(n, 30);
                if (!(b.lower.compare(p) < 0 && b.upper->compare(p) > 0))
                    ++outside;
            }
        }
        return Outcome{mismatches == 0 && outside == 0,
                       "mismatches=" + str(mismatches) + " outside_bracket=" + str(outside)};
    });

    IteratedPrimes upto_1e9(cache, 1'000'000'000ULL);

    criterion("3", "factorial upper bound, 9 <= n <= 100, all p_n^(k) <= 10^9", [&] {
        std::uint64_t checks = 0, violations = 0;
        for (Natural n = 9; n <= 100; ++n) {
            const Tower t = upto_1e9.iterate_within({n, 64}, upto_1e9.budget());
            for (Natural k = 1; k <= t.depth(); ++k) {
                const Natural v = t.values[k - 1];
                auto cmp = strictly_less([v](unsigned d) { return HPReal(v, d); },
                                         [n, k](unsigned d) { return upper_bound_factorial(n, k, d); }, kDefaultDigits);
                ++checks;
                violations += !cmp.holds;
            }
        }
        return Outcome{violations == 0 && checks > 0, "checks=" + str(checks) + " violations=" + str(violations)};
    });

    criterion("4", "n (log n)^k lower bound, 2 <= n <= 100, all p_n^(k) <= 10^9", [&] {
        std::uint64_t checks = 0, violations = 0;
        for (Natural n = 2; n <= 100; ++n) {
            const Tower t = upto_1e9.iterate_within({n, 64}, upto_1e9.budget());
            for (Natural k = 1; k <= t.depth(); ++k) {
                const Natural v = t.values[k - 1];
                auto cmp = strictly_less([n, k](unsigned d) { return lower_bound_log_power(n, k, d); },
                                         [v](unsigned d) { return HPReal(v, d); }, kDefaultDigits);
                ++checks;
                violations += !cmp.holds;
            }
        }
        return Outcome{violations == 0 && checks > 0, "checks=" + str(checks) + " violations=" + str(violations)};
    });

    // Criterion 5 is split so each clause reports on its own line.
    const HPReal at4200 = step_ratio_power(HPReal(std::uint64_t{4200}, 40));
    criterion("5a", "L(4200) at 40 digits begins 0.32627", [&] {
        const std::string s = at4200.to_string(40);
        return Outcome{s.rfind("0.32627", 0) == 0, "L(4200)=" + s};
    });
    criterion("5b", "L(4200) exceeds 0.32627", [&] {
        return Outcome{at4200 > threshold_constant(40), "margin=" + (at4200 - threshold_constant(40)).to_string(12)};
    });
    criterion("5c", "closed-form floor matches 0.3262768 to 7 digits", [] {
        const std::string s = closed_form_floor(60).to_string(7);
        return Outcome{s == "0.3262768", "floor=" + closed_form_floor(60).to_string(20)};
    });
    criterion("5d", "f, g, h increasing across every grid point", [] {
        const CertGrid base = default_cert_grid();
        const CertGrid wide = geometric_cert_grid(HPReal(std::uint64_t{4200}, kCertifyDigits),
                                                  HPReal::parse("1e30", kCertifyDigits), 60);
        const CertReport a = certify_threshold(base);
        const CertReport b = certify_threshold(wide);
        const bool ok = a.log_index_increasing && a.log_gap_increasing && a.deficit_increasing &&
                        b.log_index_increasing && b.log_gap_increasing && b.deficit_increasing && a.passed() &&
                        b.passed();
        return Outcome{ok, "points=" + str(base.points.size() + wide.points.size())};
    });

    IteratedPrimes deep(cache);

    criterion("6", "diagonal p_k^(k), k = 1..7, equals the sieve chains and brackets count_diag", [&] {
        const std::vector<Natural> expected{2, 5, 31, 277, 5381, 87803, 2269733};
        std::ostringstream detail;
        bool ok = true;
        for (Natural k = 1; k <= 7; ++k) {
            const Natural v = deep.diag(k).value;
            const auto chain = oracle::tower(reference_primes(), k, k);
            const bool match = v == expected[k - 1] && chain.size() == k && chain.back() == v &&
                               count_diag(deep, v) == k && count_diag(deep, v - 1) == k - 1;
            ok = ok && match;
            detail << v << (match ? " " : "(BAD) ");
        }
        return Outcome{ok, detail.str()};
    });

    criterion("7", "tower over 1 to depth 9; count_tower(1,100)=5, count_tower(1,10^4)=8", [&] {
        const std::vector<Natural> expected{2, 3, 5, 11, 31, 127, 709, 5381, 52711};
        const Tower t = deep.iterate({1, 9});
        const bool tower_ok = t.values == expected && oracle::tower(reference_primes(), 1, 9) == expected;
        const Natural c100 = count_tower(deep, 1, 100);
        const Natural c1e4 = count_tower(deep, 1, 10'000);
        return Outcome{tower_ok && c100 == 5 && c1e4 == 8,
                       "tower_ok=" + str(tower_ok) + " counts=" + str(c100) + "," + str(c1e4)};
    });

    criterion("8", "count_diag(x) <= count_tower(n, x), n = 1..4, x = 10^2..10^9, x >= p_n^(n)", [&] {
        std::uint64_t checks = 0, violations = 0;
        std::ostringstream detail;
        for (Natural n = 1; n <= 4; ++n) {
            const Natural start = upto_1e9.diag(n).value;
            for (Natural x = 100; x <= 1'000'000'000ULL; x *= 10) {
                if (x < start)
                    continue;
                const Natural d = count_diag(upto_1e9, x);
                const Natural t = count_tower(upto_1e9, n, x);
                ++checks;
                if (d > t)
                    ++violations;
            }
        }
        detail << "checks=" << checks << " violations=" << violations
               << " diag(10^9)=" << count_diag(upto_1e9, 1'000'000'000ULL);
        return Outcome{violations == 0 && checks > 0, detail.str()};
    });

    criterion("9", "p_1^(k)/p_k^(k) strictly decreasing for k = 2..7", [&] {
        const auto ratios = deep.ratio_to_diagonal(1, 7);
        const std::vector<std::pair<Natural, Natural>> expected{{3, 5},     {5, 31},       {11, 277},
                                                                {31, 5381}, {127, 87803}, {709, 2269733}};
        bool ok = ratios.size() == 7;
        for (std::size_t i = 1; ok && i < 7; ++i) {
            ok = ratios[i].numerator == expected[i - 1].first && ratios[i].denominator == expected[i - 1].second;
            if (i >= 2)
                ok = ok && ratios[i].ratio < ratios[i - 1].ratio;
        }
        return Outcome{ok, "last=" + (ratios.empty() ? std::string("-") : ratios.back().ratio.to_string(10))};
    });

    criterion("10", "|log-growth residual| <= 5 for every feasible diagonal k >= 3", [&] {
        std::ostringstream detail;
        bool ok = true;
        Natural k = 3;
        for (;; ++k) {
            const Tower t = deep.iterate_within({k, k}, deep.budget());
            if (t.truncated)
                break;
            const HPReal r = log_growth_residual(k, t.top());
            ok = ok && abs(r).compare(std::uint64_t{5}) <= 0;
            detail << "k=" << k << ":" << r.to_string(4) << " ";
        }
        return Outcome{ok && k > 3, detail.str()};
    });

    criterion("11", "nth_prime(10^9) within 5 minutes; diagonal depth >= 9 reachable", [&] {
        const auto start = Clock::now();
        const Natural p = nth_prime(1'000'000'000ULL);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const Natural d9 = deep.diag(9).value;
        return Outcome{p == 22'801'763'489ULL && secs <= 300.0,
                       "p=" + str(p) + " in " + std::to_string(secs) + "s, p_9^(9)=" + str(d9)};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
