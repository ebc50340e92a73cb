#include "iterprimes/iterated.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>

#include "iterprimes/errors.hpp"

namespace iterprimes {

namespace {

std::optional<Natural> parse_field(std::string_view field)
{
    if (field.empty() || field.size() > 20)
        return std::nullopt;
    Natural v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size())
        return std::nullopt;
    return v;
}

}  // namespace

TowerCache::TowerCache(std::filesystem::path path) : path_(std::move(path))
{
    if (std::filesystem::exists(*path_)) {
        std::ifstream in(*path_);
        if (!in)
            throw CacheFormatError("cannot read cache file " + path_->string());
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto fail = [&](const std::string& why) {
                throw CacheFormatError(path_->string() + ":" + std::to_string(line_no) + ": " + why +
                                       ": '" + line + "'");
            };
            // Exactly: T<sp>n<sp>level<sp>value
            if (line.size() < 2 || line[0] != 'T' || line[1] != ' ')
                fail("malformed record");
            std::string_view rest(line);
            rest.remove_prefix(2);
            Natural fields[3];
            for (int f = 0; f < 3; ++f) {
                auto sp = rest.find(' ');
                auto token = rest.substr(0, sp);
                auto v = parse_field(token);
                if (!v || (f < 2 && sp == std::string_view::npos) || (f == 2 && sp != std::string_view::npos))
                    fail("malformed record");
                fields[f] = *v;
                if (sp != std::string_view::npos)
                    rest.remove_prefix(sp + 1);
            }
            if (fields[0] == 0 || fields[1] == 0)
                fail("index and level must be positive");
            auto [it, inserted] = records_.emplace(std::pair{fields[0], fields[1]}, fields[2]);
            if (!inserted && it->second != fields[2])
                fail("conflicts with an earlier record");
        }
    }
    out_.open(*path_, std::ios::app);
    if (!out_)
        throw CacheFormatError("cannot open cache file " + path_->string() + " for appending");
}

std::optional<Natural> TowerCache::find(Natural n, Natural level) const
{
    std::shared_lock lock(mutex_);
    auto it = records_.find({n, level});
    if (it == records_.end())
        return std::nullopt;
    return it->second;
}

void TowerCache::store(Natural n, Natural level, Natural value)
{
    std::unique_lock lock(mutex_);
    auto [it, inserted] = records_.emplace(std::pair{n, level}, value);
    if (!inserted)
        return;
    if (out_.is_open()) {
        out_ << "T " << n << ' ' << level << ' ' << value << '\n';
        out_.flush();
    }
}

std::size_t TowerCache::size() const
{
    std::shared_lock lock(mutex_);
    return records_.size();
}

std::vector<std::pair<std::pair<Natural, Natural>, Natural>> TowerCache::records() const
{
    std::shared_lock lock(mutex_);
    return {records_.begin(), records_.end()};
}

IteratedPrimes::IteratedPrimes(TowerCache& cache, Natural budget, NthPrimeOptions engine)
    : cache_(cache), budget_(budget), engine_(engine)
{
    if (budget_ < 2)
        throw DomainError("budget must be at least 2");
    engine_.max_value = std::min(engine_.max_value, budget_);
}

Natural IteratedPrimes::prime_count_at(Natural limit)
{
    {
        std::lock_guard lock(pi_mutex_);
        if (auto it = pi_memo_.find(limit); it != pi_memo_.end())
            return it->second;
    }
    const Natural pi = prime_count(limit);
    std::lock_guard lock(pi_mutex_);
    pi_memo_.emplace(limit, pi);
    return pi;
}

// p_index via the cache's level-1 records.
Natural IteratedPrimes::prime_at(Natural index)
{
    if (auto hit = cache_.find(index, 1))
        return *hit;
    const Natural p = nth_prime(index, engine_);
    cache_.store(index, 1, p);
    return p;
}

Tower IteratedPrimes::iterate_within(const TowerSpec& spec, Natural limit)
{
    if (spec.n == 0 || spec.k == 0)
        throw DomainError("tower base index and depth must both be at least 1");
    limit = std::min(limit, budget_);

    Tower tower{spec.n, spec.k, {}, false};
    tower.values.reserve(spec.k);
    Natural index = spec.n;
    for (Natural level = 1; level <= spec.k; ++level) {
        Natural value;
        if (auto hit = cache_.find(spec.n, level)) {
            value = *hit;
        } else {
            // p_index <= limit iff index <= pi(limit); p_index > index always.
            if (index >= limit || index > prime_count_at(limit)) {
                tower.truncated = true;
                break;
            }
            value = prime_at(index);
            cache_.store(spec.n, level, value);
        }
        if (value > limit) {
            tower.truncated = true;
            break;
        }
        tower.values.push_back(value);
        index = value;
    }
    return tower;
}

Tower IteratedPrimes::iterate(const TowerSpec& spec)
{
    Tower tower = iterate_within(spec, budget_);
    if (tower.values.empty())
        throw BudgetExceeded("p_" + std::to_string(spec.n) + " exceeds the budget " +
                             std::to_string(budget_) + " at level 1", 0);
    return tower;
}

DiagEntry IteratedPrimes::diag(Natural k)
{
    if (k == 0)
        throw DomainError("diagonal index must be at least 1");
    Tower tower = iterate_within({k, k}, budget_);
    if (tower.truncated)
        throw BudgetExceeded("p_" + std::to_string(k) + "^(" + std::to_string(k) + ") exceeds the budget " +
                                 std::to_string(budget_) + "; deepest completed level " +
                                 std::to_string(tower.depth()),
                             tower.depth());
    return {k, tower.top()};
}

std::vector<RatioEntry> IteratedPrimes::ratio_to_diagonal(Natural n, Natural k_max, unsigned digits)
{
    if (n == 0)
        throw DomainError("base index must be at least 1");
    std::vector<RatioEntry> out;
    const Tower numerators = iterate_within({n, k_max}, budget_);
    for (Natural k = 1; k <= numerators.depth(); ++k) {
        Tower diagonal = iterate_within({k, k}, budget_);
        if (diagonal.truncated)
            break;
        const Natural num = numerators.values[k - 1];
        const Natural den = diagonal.top();
        out.push_back({k, num, den, HPReal(num, digits) / HPReal(den, digits)});
    }
    if (out.empty() && k_max > 0)
        throw BudgetExceeded("ratio p_" + std::to_string(n) + "^(1)/p_1^(1) exceeds the budget " +
                             std::to_string(budget_), 0);
    return out;
}

}  // namespace iterprimes
