#pragma once

#include <ostream>
#include <vector>

#include "iterprimes/hpreal.hpp"

namespace iterprimes {

/// Working precision for threshold certification.
inline constexpr unsigned kCertifyDigits = 60;

/// Lower end of the domain on which the threshold is claimed.
inline constexpr std::uint64_t kCertifyDomainStart = 4200;

/// Sample points for the threshold check, ascending.
struct CertGrid {
    HPReal x_min;
    HPReal x_max;
    std::vector<HPReal> points;
    unsigned digits = kCertifyDigits;
};

/// {4200, 4201, 5000, 1e4, 1e5, 1e6}.
CertGrid default_cert_grid(unsigned digits = kCertifyDigits);

/// `count` geometrically spaced points from x_min to x_max inclusive, plus
/// 4200 and 4201 whenever they fall inside. Requires 1 < x_min <= x_max.
CertGrid geometric_cert_grid(const HPReal& x_min, const HPReal& x_max, std::size_t count,
                             unsigned digits = kCertifyDigits);

/// (x/(x+1))^(x+1) * (log x / log(x+1))^(x+1), for x > 1.
HPReal step_ratio_power(const HPReal& x);

/// (x+1)(log x - log(x+1)): the log of the first factor above; x > 0.
HPReal log_index_factor(const HPReal& x);

/// (1 - 1/t)^t, for t > 1.
HPReal compound_deficit(const HPReal& t);

/// log(x+1) / (log(x+1) - log x), for x > 1. The denominator is formed as
/// log1p(1/x) at extra precision, so no digits are lost to cancellation.
HPReal log_gap_ratio(const HPReal& x);

/// (4200/4201)^4201, the floor of the first factor on x >= 4200.
HPReal index_factor_floor(unsigned digits = kCertifyDigits);

/// (log 4200 / log 4201)^((4201/4200) / (log 4201 - log 4200)), the floor of
/// the second factor on x >= 4200.
HPReal log_factor_floor(unsigned digits = kCertifyDigits);

/// Product of the two floors, approximately 0.3262768.
HPReal closed_form_floor(unsigned digits = kCertifyDigits);

/// 0.32627.
HPReal threshold_constant(unsigned digits = kCertifyDigits);

struct CertRow {
    HPReal x;
    HPReal value;         ///< step_ratio_power(x)
    HPReal margin;        ///< value - 0.32627
    HPReal index_factor;  ///< (x/(x+1))^(x+1)
    HPReal log_factor;    ///< (log x / log(x+1))^(x+1)
    bool pass;
};

struct CertReport {
    std::vector<CertRow> rows;
    unsigned digits = kCertifyDigits;
    bool within_hypothesis = false;  ///< every sample is >= 4200

    bool threshold_holds = true;       ///< every sample exceeds 0.32627
    bool log_index_increasing = true;  ///< adjacent samples of log_index_factor increase
    bool log_gap_increasing = true;    ///< adjacent samples of log_gap_ratio increase
    bool deficit_increasing = true;    ///< compound_deficit increases along log_gap_ratio(samples)
    bool factor_floors_hold = true;    ///< both factors stay above their floors (samples >= 4200)

    HPReal closed_form;
    HPReal composed_at_start;   ///< compound_deficit(log_gap_ratio(4200)), expected in (0, 1)
    bool composed_in_unit_interval = false;
    /// e^(e / 0.32627): the threshold on log n above which the lower-bound
    /// argument's second cutoff is implied by log n > 4200.
    HPReal cutoff_log_index;
    bool cutoff_within_domain = false;

    /// Verdict over every check above.
    bool passed() const noexcept;
};

/// Evaluates every sample. If all samples lie at or above 4200 and any of
/// them misses the threshold, throws ThresholdViolated; outside that domain
/// violations are reported, not thrown.
CertReport certify_threshold(const CertGrid& grid);

/// CSV `x,L,margin,pass`.
void write_cert_csv(std::ostream& out, const CertReport& report, int sig_digits);

/// Human-readable summary including the closed-form floor and monotonicity.
void write_cert_text(std::ostream& out, const CertReport& report, int sig_digits);

}  // namespace iterprimes
