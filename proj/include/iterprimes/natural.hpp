#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace iterprimes {

/// Non-negative integer used for primes, indices and counts.
///
/// Every value the engine can produce exactly (prime counting is feasible to
/// roughly 1e13, deterministic primality to 2^64) fits in 64 bits, so the
/// natural type is a plain unsigned 64-bit integer. Decimal input beyond that
/// range is rejected by parse_natural rather than silently wrapped.
using Natural = std::uint64_t;

/// Parses a decimal string. Throws DomainError on junk and
/// OutOfSupportedRange when the value does not fit in a Natural.
Natural parse_natural(std::string_view text);

/// floor(sqrt(n)), exact for the full 64-bit range.
Natural isqrt(Natural n) noexcept;

}  // namespace iterprimes
