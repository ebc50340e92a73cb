#include "iterprimes/certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iterprimes/errors.hpp"

namespace iterprimes {

namespace {

HPReal one(unsigned digits) { return HPReal(std::uint64_t{1}, digits); }

// Extra digits absorbing the magnitude of x in log-difference terms.
unsigned boosted(const HPReal& x)
{
    const double log10_x = std::max(1.0, std::log10(std::max(x.to_double(), 1.0)));
    return x.digits() + static_cast<unsigned>(std::ceil(log10_x)) + 5;
}

// log(x+1) - log x, computed without cancellation.
HPReal log_step(const HPReal& x)
{
    const unsigned d = x.digits();
    return log1p(one(d) / x);
}

}  // namespace

CertGrid default_cert_grid(unsigned digits)
{
    CertGrid grid{HPReal(std::uint64_t{4200}, digits), HPReal(std::uint64_t{1'000'000}, digits), {}, digits};
    for (std::uint64_t x : {4200u, 4201u, 5000u, 10'000u, 100'000u, 1'000'000u})
        grid.points.emplace_back(x, digits);
    return grid;
}

CertGrid geometric_cert_grid(const HPReal& x_min, const HPReal& x_max, std::size_t count, unsigned digits)
{
    if (x_min.compare(std::uint64_t{1}) <= 0)
        throw DomainError("certification grid needs x_min > 1, got " + x_min.to_string(20));
    if (x_max < x_min)
        throw DomainError("certification grid needs x_min <= x_max");
    count = std::max<std::size_t>(count, 2);

    CertGrid grid{x_min.with_digits(digits), x_max.with_digits(digits), {}, digits};
    const HPReal lo = grid.x_min;
    const HPReal ratio = log(grid.x_max / lo) / HPReal(static_cast<std::uint64_t>(count - 1), digits);
    for (std::size_t i = 0; i < count; ++i) {
        if (i + 1 == count)
            grid.points.push_back(grid.x_max);
        else
            grid.points.push_back(lo * exp(ratio * HPReal(static_cast<std::uint64_t>(i), digits)));
    }
    for (std::uint64_t critical : {kCertifyDomainStart, kCertifyDomainStart + 1}) {
        HPReal c(critical, digits);
        if (c >= grid.x_min && c <= grid.x_max)
            grid.points.push_back(std::move(c));
    }
    std::sort(grid.points.begin(), grid.points.end());
    grid.points.erase(std::unique(grid.points.begin(), grid.points.end()), grid.points.end());
    if (grid.points.size() == 1)
        grid.points.push_back(grid.points.front());
    return grid;
}

HPReal log_index_factor(const HPReal& x)
{
    if (x.sign() <= 0)
        throw DomainError("(x+1)(log x - log(x+1)) needs x > 0");
    const HPReal xb = x.with_digits(boosted(x));
    return (-(xb + one(xb.digits())) * log_step(xb)).with_digits(x.digits());
}

HPReal step_ratio_power(const HPReal& x)
{
    if (x.compare(std::uint64_t{1}) <= 0)
        throw DomainError("step ratio power needs x > 1 (log x > 0), got " + x.to_string(20));
    const HPReal xb = x.with_digits(boosted(x));
    const unsigned d = xb.digits();
    const HPReal step = log_step(xb);
    // log(log(x+1) / log x) = log1p(step / log x)
    const HPReal log_ratio = log1p(step / log(xb));
    return exp(-(xb + one(d)) * (step + log_ratio)).with_digits(x.digits());
}

HPReal compound_deficit(const HPReal& t)
{
    if (t.compare(std::uint64_t{1}) <= 0)
        throw DomainError("(1 - 1/t)^t needs t > 1, got " + t.to_string(20));
    const HPReal tb = t.with_digits(boosted(t));
    return exp(tb * log1p(-(one(tb.digits()) / tb))).with_digits(t.digits());
}

HPReal log_gap_ratio(const HPReal& x)
{
    if (x.compare(std::uint64_t{1}) <= 0)
        throw DomainError("log(x+1) / (log(x+1) - log x) needs x > 1, got " + x.to_string(20));
    const HPReal xb = x.with_digits(boosted(x));
    return (log(xb + one(xb.digits())) / log_step(xb)).with_digits(x.digits());
}

HPReal index_factor_floor(unsigned digits)
{
    const HPReal a(std::uint64_t{4200}, digits + 10);
    const HPReal b(std::uint64_t{4201}, digits + 10);
    return pow(a / b, std::uint64_t{4201}).with_digits(digits);
}

HPReal log_factor_floor(unsigned digits)
{
    // Plain differences at generous precision; a separate route from the
    // log1p formulation used by step_ratio_power.
    const unsigned d = digits + 20;
    const HPReal a(std::uint64_t{4200}, d);
    const HPReal b(std::uint64_t{4201}, d);
    const HPReal exponent = (b / a) / (log(b) - log(a));
    return pow(log(a) / log(b), exponent).with_digits(digits);
}

HPReal closed_form_floor(unsigned digits)
{
    return index_factor_floor(digits) * log_factor_floor(digits);
}

HPReal threshold_constant(unsigned digits) { return HPReal::parse("0.32627", digits); }

bool CertReport::passed() const noexcept
{
    return threshold_holds && log_index_increasing && log_gap_increasing && deficit_increasing &&
           factor_floors_hold && composed_in_unit_interval && cutoff_within_domain;
}

CertReport certify_threshold(const CertGrid& grid)
{
    const unsigned d = grid.digits;
    if (grid.points.empty())
        throw DomainError("certification grid is empty");
    if (!std::is_sorted(grid.points.begin(), grid.points.end()))
        throw DomainError("certification grid points must be ascending");

    CertReport report;
    report.digits = d;
    const HPReal domain_start(kCertifyDomainStart, d);
    report.within_hypothesis = grid.points.front() >= domain_start;

    const HPReal threshold = threshold_constant(d);
    const HPReal first_floor = index_factor_floor(d);
    const HPReal second_floor = log_factor_floor(d);
    report.closed_form = first_floor * second_floor;

    std::vector<HPReal> f_values, h_values, g_values;
    for (const auto& raw : grid.points) {
        const HPReal x = raw.with_digits(d);
        HPReal value = step_ratio_power(x);
        HPReal margin = value - threshold;
        const bool pass = margin.sign() > 0;
        HPReal f = log_index_factor(x);
        HPReal index_factor = exp(f);
        HPReal log_factor = value / index_factor;

        report.threshold_holds = report.threshold_holds && pass;
        if (x >= domain_start && (index_factor < first_floor || log_factor < second_floor))
            report.factor_floors_hold = false;

        HPReal h = log_gap_ratio(x);
        g_values.push_back(compound_deficit(h));
        h_values.push_back(std::move(h));
        f_values.push_back(std::move(f));
        report.rows.push_back({x, std::move(value), std::move(margin), std::move(index_factor),
                               std::move(log_factor), pass});
    }

    // Strict increase across distinct adjacent samples.
    auto increasing = [&](const std::vector<HPReal>& ys) {
        for (std::size_t i = 1; i < ys.size(); ++i)
            if (grid.points[i] > grid.points[i - 1] && !(ys[i] > ys[i - 1]))
                return false;
        return true;
    };
    report.log_index_increasing = increasing(f_values);
    report.log_gap_increasing = increasing(h_values);
    report.deficit_increasing = increasing(g_values);

    report.composed_at_start = compound_deficit(log_gap_ratio(domain_start));
    report.composed_in_unit_interval =
        report.composed_at_start.sign() > 0 && report.composed_at_start.compare(std::uint64_t{1}) < 0;

    report.cutoff_log_index = exp(euler_e(d) / threshold);
    report.cutoff_within_domain = report.cutoff_log_index <= domain_start;

    if (report.within_hypothesis && !report.threshold_holds) {
        std::string where;
        for (const auto& row : report.rows)
            if (!row.pass)
                where += " x=" + row.x.to_string(20) + " (value " + row.value.to_string(20) + ")";
        throw ThresholdViolated("threshold 0.32627 violated inside x >= 4200 at" + where);
    }
    return report;
}

void write_cert_csv(std::ostream& out, const CertReport& report, int sig_digits)
{
    out << "x,L,margin,pass\n";
    for (const auto& row : report.rows)
        out << row.x.to_string(sig_digits) << ',' << row.value.to_string(sig_digits) << ','
            << row.margin.to_string(sig_digits) << ',' << (row.pass ? "true" : "false") << '\n';
}

void write_cert_text(std::ostream& out, const CertReport& report, int sig_digits)
{
    auto yn = [](bool b) { return b ? "yes" : "NO"; };
    out << "threshold 0.32627, working precision " << report.digits << " digits\n";
    out << "samples " << report.rows.size() << (report.within_hypothesis ? " (all x >= 4200)\n"
                                                                          : " (some x < 4200: outside the claimed domain)\n");
    for (const auto& row : report.rows)
        out << "  x=" << row.x.to_string(sig_digits) << "  L=" << row.value.to_string(sig_digits)
            << "  margin=" << row.margin.to_string(sig_digits) << "  " << (row.pass ? "pass" : "FAIL") << '\n';
    out << "closed-form floor: " << report.closed_form.to_string(sig_digits) << '\n';
    out << "threshold holds at all samples: " << yn(report.threshold_holds) << '\n';
    out << "first factor log increasing: " << yn(report.log_index_increasing) << '\n';
    out << "log gap ratio increasing: " << yn(report.log_gap_increasing) << '\n';
    out << "compound deficit increasing along log gap ratio: " << yn(report.deficit_increasing) << '\n';
    out << "factors above their floors: " << yn(report.factor_floors_hold) << '\n';
    out << "deficit(gap ratio(4200)) = " << report.composed_at_start.to_string(sig_digits) << " in (0,1): "
        << yn(report.composed_in_unit_interval) << '\n';
    out << "e^(e/0.32627) = " << report.cutoff_log_index.to_string(sig_digits)
        << " <= 4200: " << yn(report.cutoff_within_domain) << '\n';
    out << "verdict: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace iterprimes
