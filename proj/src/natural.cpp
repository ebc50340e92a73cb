#include "iterprimes/natural.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <system_error>

#include "iterprimes/errors.hpp"

namespace iterprimes {

Natural parse_natural(std::string_view text)
{
    if (text.empty())
        throw DomainError("expected a non-negative integer, got an empty string");
    for (char c : text)
        if (c < '0' || c > '9')
            throw DomainError("expected a non-negative integer, got '" + std::string(text) + "'");

    Natural value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw OutOfSupportedRange("integer " + std::string(text) + " exceeds 2^64 - 1");
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw DomainError("cannot parse integer '" + std::string(text) + "'");
    return value;
}

Natural isqrt(Natural n) noexcept
{
    auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && (r > std::numeric_limits<std::uint32_t>::max() || r * r > n))
        --r;
    while (r < std::numeric_limits<std::uint32_t>::max() && (r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

}  // namespace iterprimes
