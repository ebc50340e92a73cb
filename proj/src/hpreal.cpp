#include "iterprimes/hpreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include "iterprimes/errors.hpp"

namespace iterprimes {

namespace {

constexpr double kBitsPerDigit = 3.3219280948873623;  // log2(10)
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

}  // namespace

mpfr_prec_t digits_to_bits(unsigned digits) noexcept
{
    auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * kBitsPerDigit)) + 16;
    return std::max<mpfr_prec_t>(bits, 80);
}

HPReal::HPReal(unsigned digits) : digits_(std::max(digits, kMinDigits))
{
    mpfr_init2(value_, digits_to_bits(digits_));
    mpfr_set_zero(value_, 1);
}

HPReal::HPReal(std::uint64_t value, unsigned digits) : HPReal(digits)
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    mpfr_set_ui(value_, static_cast<unsigned long>(value), kRnd);
}

HPReal::HPReal(double value, unsigned digits) : HPReal(digits)
{
    mpfr_set_d(value_, value, kRnd);
}

HPReal HPReal::parse(std::string_view text, unsigned digits)
{
    HPReal r(digits);
    std::string s(text);
    if (s.empty() || mpfr_set_str(r.value_, s.c_str(), 10, kRnd) != 0)
        throw DomainError("cannot parse real number '" + s + "'");
    return r;
}

HPReal::HPReal(const HPReal& other) : digits_(other.digits_)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
}

HPReal::HPReal(HPReal&& other) noexcept : digits_(other.digits_)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

HPReal& HPReal::operator=(const HPReal& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, kRnd);
        digits_ = other.digits_;
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept
{
    if (this != &other) {
        mpfr_swap(value_, other.value_);
        std::swap(digits_, other.digits_);
    }
    return *this;
}

HPReal::~HPReal() { mpfr_clear(value_); }

HPReal HPReal::with_digits(unsigned digits) const
{
    HPReal r(digits);
    mpfr_set(r.value_, value_, kRnd);
    return r;
}

void HPReal::widen_to(unsigned digits)
{
    if (digits <= digits_)
        return;
    mpfr_prec_round(value_, digits_to_bits(digits), kRnd);
    digits_ = digits;
}

double HPReal::to_double() const { return mpfr_get_d(value_, kRnd); }
bool HPReal::is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
int HPReal::sign() const noexcept { return mpfr_sgn(value_); }

int HPReal::compare(std::uint64_t rhs) const noexcept
{
    return mpfr_cmp_ui(value_, static_cast<unsigned long>(rhs));
}

int HPReal::compare(const HPReal& rhs) const noexcept { return mpfr_cmp(value_, rhs.value_); }

std::string HPReal::to_string(int sig) const
{
    sig = std::max(sig, 1);
    char* raw = nullptr;
    if (mpfr_asprintf(&raw, "%.*Rg", sig, value_) < 0)
        return "nan";
    std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
    return std::string(raw);
}

HPReal& HPReal::operator+=(const HPReal& rhs)
{
    widen_to(rhs.digits_);
    mpfr_add(value_, value_, rhs.value_, kRnd);
    return *this;
}

HPReal& HPReal::operator-=(const HPReal& rhs)
{
    widen_to(rhs.digits_);
    mpfr_sub(value_, value_, rhs.value_, kRnd);
    return *this;
}

HPReal& HPReal::operator*=(const HPReal& rhs)
{
    widen_to(rhs.digits_);
    mpfr_mul(value_, value_, rhs.value_, kRnd);
    return *this;
}

HPReal& HPReal::operator/=(const HPReal& rhs)
{
    widen_to(rhs.digits_);
    mpfr_div(value_, value_, rhs.value_, kRnd);
    return *this;
}

HPReal HPReal::operator-() const
{
    HPReal r(*this);
    mpfr_neg(r.value_, r.value_, kRnd);
    return r;
}

HPReal log(const HPReal& x)
{
    HPReal r(x.digits());
    mpfr_log(r.get(), x.get(), kRnd);
    return r;
}

HPReal log1p(const HPReal& x)
{
    HPReal r(x.digits());
    mpfr_log1p(r.get(), x.get(), kRnd);
    return r;
}

HPReal exp(const HPReal& x)
{
    HPReal r(x.digits());
    mpfr_exp(r.get(), x.get(), kRnd);
    return r;
}

HPReal abs(const HPReal& x)
{
    HPReal r(x.digits());
    mpfr_abs(r.get(), x.get(), kRnd);
    return r;
}

HPReal pow(const HPReal& base, const HPReal& exponent)
{
    HPReal r(std::max(base.digits(), exponent.digits()));
    mpfr_pow(r.get(), base.get(), exponent.get(), kRnd);
    return r;
}

HPReal pow(const HPReal& base, std::uint64_t exponent)
{
    HPReal r(base.digits());
    mpfr_pow_ui(r.get(), base.get(), static_cast<unsigned long>(exponent), kRnd);
    return r;
}

HPReal floor(const HPReal& x)
{
    HPReal r(x.digits());
    mpfr_floor(r.get(), x.get());
    return r;
}

HPReal factorial(std::uint64_t n, unsigned digits)
{
    HPReal r(digits);
    mpfr_fac_ui(r.get(), static_cast<unsigned long>(n), kRnd);
    return r;
}

HPReal euler_e(unsigned digits)
{
    return exp(HPReal(std::uint64_t{1}, digits));
}

std::string LogMagnitude::scientific(int sig) const
{
    const unsigned digits = log_value.digits();
    HPReal ln10 = log(HPReal(std::uint64_t{10}, digits));
    HPReal log10_value = log_value / ln10;
    HPReal exponent = floor(log10_value);
    HPReal mantissa = exp((log10_value - exponent) * ln10);

    std::string m = mantissa.to_string(sig);
    // Rounding can carry the mantissa to 10.
    if (mantissa.compare(HPReal(10.0 - std::pow(10.0, 1 - sig) / 2, digits)) >= 0) {
        exponent += HPReal(std::uint64_t{1}, digits);
        m = "1";
    }
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.0Rf", exponent.get());
    std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
    return m + "e" + (raw[0] == '-' ? "" : "+") + raw;
}

}  // namespace iterprimes
