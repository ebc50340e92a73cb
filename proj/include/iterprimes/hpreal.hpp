#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <mpfr.h>

namespace iterprimes {

/// Default significant decimal digits for bound and comparator evaluation.
inline constexpr unsigned kDefaultDigits = 50;

/// Smallest precision accepted anywhere; keeps every 64-bit Natural exact.
inline constexpr unsigned kMinDigits = 15;

/// High-precision real number carrying its precision in decimal digits.
///
/// Owns an mpfr_t. Binary operations produce a result at the larger of the
/// two operand precisions, so mixing precisions never silently truncates.
class HPReal {
public:
    explicit HPReal(unsigned digits = kDefaultDigits);
    HPReal(std::uint64_t value, unsigned digits);
    HPReal(double value, unsigned digits);

    /// Parses a decimal literal such as "0.32627" or "1e6".
    static HPReal parse(std::string_view text, unsigned digits);

    HPReal(const HPReal& other);
    HPReal(HPReal&& other) noexcept;
    HPReal& operator=(const HPReal& other);
    HPReal& operator=(HPReal&& other) noexcept;
    ~HPReal();

    unsigned digits() const noexcept { return digits_; }

    /// Copy rounded (or widened) to a new precision.
    HPReal with_digits(unsigned digits) const;

    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }

    double to_double() const;
    bool is_finite() const noexcept;
    int sign() const noexcept;

    /// Exact three-way comparison against an integer.
    int compare(std::uint64_t rhs) const noexcept;
    int compare(const HPReal& rhs) const noexcept;

    /// `sig` significant digits; plain decimal when the magnitude is modest,
    /// otherwise scientific notation.
    std::string to_string(int sig) const;
    /// Full stored precision.
    std::string to_string() const { return to_string(static_cast<int>(digits_)); }

    HPReal& operator+=(const HPReal& rhs);
    HPReal& operator-=(const HPReal& rhs);
    HPReal& operator*=(const HPReal& rhs);
    HPReal& operator/=(const HPReal& rhs);

    friend HPReal operator+(HPReal lhs, const HPReal& rhs) { return lhs += rhs; }
    friend HPReal operator-(HPReal lhs, const HPReal& rhs) { return lhs -= rhs; }
    friend HPReal operator*(HPReal lhs, const HPReal& rhs) { return lhs *= rhs; }
    friend HPReal operator/(HPReal lhs, const HPReal& rhs) { return lhs /= rhs; }
    HPReal operator-() const;

    friend bool operator<(const HPReal& a, const HPReal& b) { return a.compare(b) < 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return a.compare(b) > 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return a.compare(b) >= 0; }
    friend bool operator==(const HPReal& a, const HPReal& b) { return a.compare(b) == 0; }

private:
    void widen_to(unsigned digits);

    mpfr_t value_;
    unsigned digits_;
};

mpfr_prec_t digits_to_bits(unsigned digits) noexcept;

HPReal log(const HPReal& x);
HPReal log1p(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal abs(const HPReal& x);
HPReal pow(const HPReal& base, const HPReal& exponent);
HPReal pow(const HPReal& base, std::uint64_t exponent);
HPReal floor(const HPReal& x);
HPReal factorial(std::uint64_t n, unsigned digits);
HPReal euler_e(unsigned digits);

/// A positive real too large to print sensibly, held as its natural logarithm.
///
/// Values such as (e*4201)^4201 are carried this way; `scientific` renders
/// mantissa and base-10 exponent without materializing the number.
struct LogMagnitude {
    HPReal log_value;

    HPReal value() const { return exp(log_value); }
    std::string scientific(int sig) const;
};

}  // namespace iterprimes
