#include <doctest.h>

#include <sstream>
#include <string>

#include "iterprimes/certify.hpp"
#include "iterprimes/errors.hpp"

using namespace iterprimes;

namespace {

HPReal num(const char* text, unsigned digits = kCertifyDigits) { return HPReal::parse(text, digits); }

// |a - b| < 10^-digits
bool agree(const HPReal& a, const HPReal& b, unsigned digits)
{
    return abs(a - b) < pow(HPReal(0.1, a.digits() + 10), std::uint64_t{digits});
}

// Straight transcription of the definition, no log1p: an independent route
// that needs only generous precision to survive its cancellation.
HPReal naive_step_ratio_power(const HPReal& x)
{
    const HPReal wide = x.with_digits(x.digits() + 40);
    const HPReal one(std::uint64_t{1}, wide.digits());
    const HPReal x1 = wide + one;
    return (pow(wide / x1, x1) * pow(log(wide) / log(x1), x1)).with_digits(x.digits());
}

}  // namespace

// Reference digits below were produced with mpmath at 80 digits.

TEST_CASE("step ratio power at the domain start")
{
    const HPReal at4200 = step_ratio_power(HPReal(std::uint64_t{4200}, kCertifyDigits));
    CHECK(agree(at4200, num("0.32628147205393321740026144163105710839440886711666"), 45));
    CHECK(at4200 > threshold_constant());
    CHECK(agree(at4200, naive_step_ratio_power(HPReal(std::uint64_t{4200}, kCertifyDigits)), 50));
}

TEST_CASE("step ratio power elsewhere")
{
    CHECK(agree(step_ratio_power(HPReal(std::uint64_t{2}, 60)),
                num("0.074416501385502816943138504761007260529059710981946"), 45));
    const HPReal big = step_ratio_power(HPReal(std::uint64_t{1'000'000}, 60));
    CHECK(agree(big, num("0.34219211932811709629822305020457789508201316024521"), 45));
    CHECK(big > step_ratio_power(HPReal(std::uint64_t{4200}, 60)));
    // x = 1e30: the log gap is ~1e-30, so cancellation-free evaluation matters.
    CHECK(agree(step_ratio_power(num("1e30")), num("0.36259220343370284730447513025288122124517204229125"), 40));
    CHECK_THROWS_AS(step_ratio_power(HPReal(std::uint64_t{1}, 60)), DomainError);
    CHECK_THROWS_AS(step_ratio_power(num("0.5")), DomainError);
}

TEST_CASE("closed-form floor")
{
    const HPReal c = closed_form_floor();
    CHECK(c.to_string(7) == "0.3262768");
    CHECK(c > threshold_constant());
    CHECK(agree(c, index_factor_floor() * log_factor_floor(), 55));
    // The floor sits below the function it bounds.
    CHECK(c < step_ratio_power(HPReal(std::uint64_t{4200}, kCertifyDigits)));
}

TEST_CASE("log index factor")
{
    CHECK(log_index_factor(HPReal(std::uint64_t{1}, 40)).to_double() == doctest::Approx(-1.3862943611198906));
    CHECK(log_index_factor(HPReal(std::uint64_t{4200}, 40)).to_string(7) == "-1.000119");
    CHECK_THROWS_AS(log_index_factor(HPReal(std::uint64_t{0}, 40)), DomainError);
    // Its exponential is the first factor of the step ratio power.
    const HPReal x(std::uint64_t{4200}, 60);
    const HPReal one(std::uint64_t{1}, 60);
    CHECK(agree(exp(log_index_factor(x)), pow(x / (x + one), x + one), 50));
}

TEST_CASE("compound deficit and log gap ratio")
{
    CHECK(compound_deficit(HPReal(std::uint64_t{2}, 40)).to_string(10) == "0.25");
    CHECK(agree(compound_deficit(HPReal(std::uint64_t{3}, 40)),
                HPReal(std::uint64_t{8}, 40) / HPReal(std::uint64_t{27}, 40), 35));
    CHECK(agree(log_gap_ratio(HPReal(std::uint64_t{2}, 60)),
                num("2.7095112913514547769761902621740141406150037352361"), 45));
    CHECK(agree(log_gap_ratio(HPReal(std::uint64_t{4200}, 60)),
                num("35045.098432329433844592479260515075182936247725096"), 40));
    // 30 digits lost to cancellation in the naive form; none here.
    CHECK(agree(log_gap_ratio(num("1e30")), num("69077552789821370520539743640566.465004427955344128"), 15));

    const HPReal composed = compound_deficit(log_gap_ratio(HPReal(std::uint64_t{4200}, 60)));
    CHECK(agree(composed, num("0.36787419245148472882577246475758995189228293829361"), 45));
    CHECK(composed.sign() > 0);
    CHECK(composed.compare(std::uint64_t{1}) < 0);

    CHECK_THROWS_AS(compound_deficit(HPReal(std::uint64_t{1}, 40)), DomainError);
    CHECK_THROWS_AS(log_gap_ratio(HPReal(std::uint64_t{1}, 40)), DomainError);
}

TEST_CASE("monotonicity on logarithmic grids")
{
    // t and x from just above 1 up to 1e12, twelve points per decade.
    std::vector<HPReal> grid;
    for (int i = 1; i <= 12 * 12; ++i)
        grid.push_back(exp(log(HPReal(std::uint64_t{10}, 60)) * HPReal(i / 12.0, 60)));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        REQUIRE(log_index_factor(grid[i - 1]) < log_index_factor(grid[i]));
        REQUIRE(compound_deficit(grid[i - 1]) < compound_deficit(grid[i]));
        REQUIRE(log_gap_ratio(grid[i - 1]) < log_gap_ratio(grid[i]));
    }
    // f(x) < 0 everywhere
    for (const auto& x : grid)
        REQUIRE(log_index_factor(x).sign() < 0);
}

TEST_CASE("precision robustness")
{
    const HPReal lo = step_ratio_power(HPReal(std::uint64_t{4200}, 60));
    const HPReal hi = step_ratio_power(HPReal(std::uint64_t{4200}, 120));
    CHECK(agree(lo, hi, 58));
    CHECK(lo.to_string(55) == hi.to_string(55));
    CHECK(closed_form_floor(60).to_string(55) == closed_form_floor(120).to_string(55));
}

TEST_CASE("certify the default grid")
{
    const CertGrid grid = default_cert_grid();
    REQUIRE(grid.points.size() == 6);
    const CertReport report = certify_threshold(grid);
    CHECK(report.within_hypothesis);
    CHECK(report.threshold_holds);
    CHECK(report.log_index_increasing);
    CHECK(report.log_gap_increasing);
    CHECK(report.deficit_increasing);
    CHECK(report.factor_floors_hold);
    CHECK(report.composed_in_unit_interval);
    CHECK(report.cutoff_within_domain);
    CHECK(report.cutoff_log_index.to_string(12) == "4152.17506666");
    CHECK(report.passed());
    for (const auto& row : report.rows)
        CHECK(row.margin.sign() > 0);
    CHECK(report.closed_form.to_string(7) == "0.3262768");

    std::ostringstream csv;
    write_cert_csv(csv, report, 8);
    CHECK(csv.str().rfind("x,L,margin,pass\n4200,0.32628147,", 0) == 0);
}

TEST_CASE("geometric grid includes the critical points")
{
    const CertGrid g = geometric_cert_grid(HPReal(std::uint64_t{1000}, 60), num("1e8"), 5);
    CHECK(g.points.size() == 7);
    CHECK(g.points.front().compare(std::uint64_t{1000}) == 0);
    CHECK(g.points.back().compare(std::uint64_t{100'000'000}) == 0);
    bool has4200 = false, has4201 = false;
    for (const auto& p : g.points) {
        has4200 = has4200 || p.compare(std::uint64_t{4200}) == 0;
        has4201 = has4201 || p.compare(std::uint64_t{4201}) == 0;
    }
    CHECK(has4200);
    CHECK(has4201);
    CHECK_THROWS_AS(geometric_cert_grid(HPReal(std::uint64_t{1}, 60), num("10"), 5), DomainError);
    CHECK_THROWS_AS(geometric_cert_grid(num("10"), num("5"), 5), DomainError);
}

TEST_CASE("outside the domain violations are reported, not thrown")
{
    const CertReport report = certify_threshold(geometric_cert_grid(num("2"), num("10"), 4));
    CHECK_FALSE(report.within_hypothesis);
    CHECK_FALSE(report.threshold_holds);
    CHECK_FALSE(report.passed());
    CHECK(report.rows.front().value.to_double() == doctest::Approx(0.0744165));
}

TEST_CASE("single-point and unsorted grids")
{
    CertGrid grid{HPReal(std::uint64_t{4200}, 60), HPReal(std::uint64_t{4200}, 60), {}, 60};
    grid.points.push_back(HPReal(std::uint64_t{4200}, 60));
    CHECK_NOTHROW(certify_threshold(grid));

    CertGrid unsorted = default_cert_grid();
    std::swap(unsorted.points[0], unsorted.points[5]);
    CHECK_THROWS_AS(certify_threshold(unsorted), DomainError);
}
