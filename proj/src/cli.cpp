#include "iterprimes/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iterprimes/bounds.hpp"
#include "iterprimes/certify.hpp"
#include "iterprimes/counting.hpp"
#include "iterprimes/errors.hpp"
#include "iterprimes/iterated.hpp"
#include "iterprimes/prime_engine.hpp"

namespace iterprimes {

namespace {

// Decimal integer, optionally in the shorthand <mantissa>e<exponent>.
Natural parse_arg(const std::string& text)
{
    const auto e = text.find_first_of("eE");
    if (e == std::string::npos)
        return parse_natural(text);
    Natural value = parse_natural(text.substr(0, e));
    const Natural exponent = parse_natural(text.substr(e + 1));
    for (Natural i = 0; i < exponent; ++i) {
        if (value > UINT64_MAX / 10)
            throw OutOfSupportedRange("integer " + text + " exceeds 2^64 - 1");
        value *= 10;
    }
    return value;
}

std::vector<Natural> parse_list(const std::string& text)
{
    std::vector<Natural> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(parse_arg(item));
    return out;
}

struct RunConfig {
    std::string budget = "100000000000";
    std::optional<unsigned> prec;
    std::string cache_path;
    std::string out_path;
    bool no_timestamp = false;
    int digits = 12;
};

class Session {
public:
    Session(const RunConfig& cfg, std::ostream& out, std::ostream& err)
        : cfg_(cfg), err_(err), budget_(parse_arg(cfg.budget))
    {
        if (budget_ < 2)
            throw DomainError("--budget must be at least 2");
        if (!cfg.out_path.empty()) {
            file_.open(cfg.out_path);
            if (!file_)
                throw DomainError("cannot open output file " + cfg.out_path);
            out_ = &file_;
        } else {
            out_ = &out;
        }
        cache_ = cfg.cache_path.empty() ? std::make_unique<TowerCache>()
                                        : std::make_unique<TowerCache>(cfg.cache_path);
        primes_ = std::make_unique<IteratedPrimes>(*cache_, budget_);
    }

    std::ostream& out() { return *out_; }
    std::ostream& err() { return err_; }
    IteratedPrimes& primes() { return *primes_; }
    Natural budget() const { return budget_; }
    unsigned prec(unsigned fallback) const { return cfg_.prec.value_or(fallback); }
    int digits() const { return cfg_.digits; }

    void timestamp()
    {
        if (cfg_.no_timestamp)
            return;
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        out() << "# generated " << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << '\n';
    }

private:
    const RunConfig& cfg_;
    std::ostream& err_;
    Natural budget_;
    std::ofstream file_;
    std::ostream* out_ = nullptr;
    std::unique_ptr<TowerCache> cache_;
    std::unique_ptr<IteratedPrimes> primes_;
};

bool suite_includes(const std::string& suite, BoundKind kind)
{
    if (suite == "all")
        return true;
    if (suite == "rosser")
        return kind == BoundKind::RosserLower || kind == BoundKind::RosserUpper;
    if (suite == "lemma1")
        return kind == BoundKind::FactorialUpper || kind == BoundKind::PowerUpper;
    if (suite == "ineq3")
        return kind == BoundKind::LogPowerLower;
    return false;
}

int cmd_verify(Session& s, const std::string& suite, Natural n_max, Natural k_max)
{
    const unsigned prec = s.prec(kDefaultDigits);
    const Natural depth = suite == "rosser" ? 1 : k_max;
    std::size_t reports = 0, applicable = 0, held = 0, inapplicable = 0, truncated = 0;

    s.timestamp();
    write_bound_csv_header(s.out());
    for (Natural n = 1; n <= n_max; ++n) {
        Tower tower = s.primes().iterate_within({n, std::max<Natural>(depth, 1)}, s.budget());
        if (tower.truncated)
            ++truncated;
        for (Natural k = 1; k <= tower.depth(); ++k) {
            BoundReport report = check_bounds(n, k, tower.values[k - 1], prec);
            std::erase_if(report.checks, [&](const BoundCheck& c) { return !suite_includes(suite, c.kind); });
            for (const auto& c : report.checks) {
                if (!c.applicable) {
                    ++inapplicable;
                    continue;
                }
                ++applicable;
                if (*c.holds)
                    ++held;
            }
            write_bound_csv(s.out(), report, s.digits());
            ++reports;
        }
    }
    s.out().flush();
    const std::size_t violated = applicable - held;
    s.err() << "summary: suite=" << suite << " reports=" << reports << " applicable=" << applicable
            << " held=" << held << " violated=" << violated << " inapplicable=" << inapplicable
            << " truncated_towers=" << truncated << '\n';
    if (violated > 0)
        return kExitViolation;
    if (truncated > 0) {
        s.err() << "budget " << s.budget() << " exhausted before the requested depth\n";
        return kExitBudget;
    }
    return kExitOk;
}

struct CertifyOptions {
    std::string x_min;
    std::string x_max;
    std::size_t points = 8;
    bool csv = false;
};

int cmd_certify(Session& s, const CertifyOptions& opt)
{
    const unsigned prec = s.prec(kCertifyDigits);
    CertGrid grid = default_cert_grid(prec);
    if (!opt.x_min.empty() || !opt.x_max.empty()) {
        const HPReal lo = opt.x_min.empty() ? HPReal(kCertifyDomainStart, prec) : HPReal::parse(opt.x_min, prec);
        const HPReal hi = opt.x_max.empty() ? HPReal(std::uint64_t{1'000'000}, prec) : HPReal::parse(opt.x_max, prec);
        grid = geometric_cert_grid(lo, hi, opt.points, prec);
    }
    const int shown = std::max(s.digits(), 7);
    CertReport report = certify_threshold(grid);
    if (opt.csv) {
        s.timestamp();
        write_cert_csv(s.out(), report, shown);
    } else {
        write_cert_text(s.out(), report, shown);
    }
    s.out().flush();
    if (report.passed())
        return kExitOk;
    if (!report.within_hypothesis) {
        s.err() << "threshold violations outside x >= 4200 (the claimed domain)\n";
        return kExitOutOfHypothesis;
    }
    return kExitViolation;
}

struct TableOptions {
    std::string xs;
    std::string ns;
    bool residuals = false;
    bool ratios = false;
    Natural ratio_n = 1;
    Natural k_max = 6;
};

int cmd_table(Session& s, const TableOptions& opt)
{
    const unsigned prec = s.prec(kDefaultDigits);
    const bool counts = !opt.xs.empty() || (!opt.residuals && !opt.ratios);
    int status = kExitOk;
    bool first_block = true;
    auto separate = [&] {
        if (!first_block)
            s.out() << '\n';
        first_block = false;
    };

    s.timestamp();
    if (counts) {
        separate();
        const auto xs = parse_list(opt.xs);
        const auto ns = parse_list(opt.ns);
        const auto records = ratio_series(s.primes(), xs, ns, prec);
        write_count_csv(s.out(), records, s.digits());
    }
    if (opt.residuals) {
        separate();
        s.out() << "k,value,residual\n";
        for (Natural k = 3; k <= opt.k_max; ++k) {
            Tower t = s.primes().iterate_within({k, k}, s.budget());
            if (t.truncated) {
                s.err() << "diagonal element " << k << " exceeds the budget " << s.budget() << '\n';
                status = kExitBudget;
                break;
            }
            s.out() << k << ',' << t.top() << ',' << log_growth_residual(k, t.top(), prec).to_string(s.digits())
                    << '\n';
        }
    }
    if (opt.ratios) {
        separate();
        s.out() << "n,k,numerator,denominator,ratio\n";
        const auto entries = s.primes().ratio_to_diagonal(opt.ratio_n, opt.k_max, prec);
        for (const auto& e : entries)
            s.out() << opt.ratio_n << ',' << e.k << ',' << e.numerator << ',' << e.denominator << ','
                    << e.ratio.to_string(s.digits()) << '\n';
        if (entries.size() < opt.k_max) {
            s.err() << "ratios stop at k = " << entries.size() << ": budget " << s.budget() << " reached\n";
            status = kExitBudget;
        }
    }
    s.out().flush();
    return status;
}

int cmd_cache_check(Session& s)
{
    const auto records = s.primes().cache().records();
    std::size_t checked = 0, mismatched = 0;
    for (const auto& [key, value] : records) {
        const auto [n, level] = key;
        Natural index = n;
        if (level > 1) {
            auto prev = s.primes().cache().find(n, level - 1);
            if (!prev) {
                Tower t = s.primes().iterate_within({n, level - 1}, UINT64_MAX);
                if (t.truncated)
                    continue;
                prev = t.top();
            }
            index = *prev;
        }
        ++checked;
        if (nth_prime(index) != value) {
            ++mismatched;
            s.err() << "mismatch: T " << n << ' ' << level << ' ' << value << '\n';
        }
    }
    s.out() << "records " << records.size() << ", checked " << checked << ", mismatched " << mismatched << '\n';
    return mismatched ? kExitViolation : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Iterated primes p_n^(k), their counting functions, and explicit bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--budget", cfg.budget, "Largest prime value any tower may reach")->capture_default_str();
    app.add_option("--prec", cfg.prec, "Working precision in significant decimal digits")
        ->check(CLI::Range(kMinDigits, 100000u));
    app.add_option("--cache", cfg.cache_path, "Tower cache file (append-only)");
    app.add_option("--out", cfg.out_path, "Write output here instead of standard output");
    app.add_flag("--no-timestamp", cfg.no_timestamp, "Omit the '# generated' line from CSV output");
    app.add_option("--digits", cfg.digits, "Significant digits when printing reals")
        ->capture_default_str()
        ->check(CLI::Range(1, 10000));

    std::string a1, a2;
    auto* nth = app.add_subcommand("nth", "Print p_n");
    nth->add_option("n", a1)->required();
    auto* pi = app.add_subcommand("pi", "Print pi(x)");
    pi->add_option("x", a1)->required();
    auto* iter = app.add_subcommand("iter", "Print the tower p_n^(1..k), one value per line");
    iter->add_option("n", a1)->required();
    iter->add_option("k", a2)->required();
    auto* diag = app.add_subcommand("diag", "Print p_k^(k)");
    diag->add_option("k", a1)->required();

    auto* count = app.add_subcommand("count", "Counting functions");
    count->require_subcommand(1);
    auto* count_diag_cmd = count->add_subcommand("diag", "Number of k with p_k^(k) <= x");
    count_diag_cmd->add_option("x", a1)->required();
    auto* count_tower_cmd = count->add_subcommand("tower", "Number of k with p_n^(k) <= x");
    count_tower_cmd->add_option("n", a1)->required();
    count_tower_cmd->add_option("x", a2)->required();

    std::string suite;
    std::string n_max = "100", k_max = "3";
    auto* verify = app.add_subcommand("verify", "Check computed iterated primes against the explicit bounds");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember({"rosser", "lemma1", "ineq3", "all"}));
    verify->add_option("--n-max", n_max)->capture_default_str();
    verify->add_option("--k-max", k_max)->capture_default_str();

    CertifyOptions cert;
    auto* certify = app.add_subcommand("certify", "Sample the threshold 0.32627 for the step ratio power");
    certify->add_option("--x-min", cert.x_min, "Smallest sample (default grid when neither bound is given)");
    certify->add_option("--x-max", cert.x_max, "Largest sample");
    certify->add_option("--points", cert.points, "Geometric sample count")->capture_default_str();
    certify->add_flag("--csv", cert.csv, "CSV output (x,L,margin,pass)");

    TableOptions table;
    std::string table_n = "1", table_k = "6";
    auto* table_cmd = app.add_subcommand("table", "Counting-function, residual and ratio tables as CSV");
    table_cmd->add_option("--xs", table.xs, "Comma-separated ascending x values");
    table_cmd->add_option("--ns", table.ns, "Comma-separated tower base indices");
    table_cmd->add_flag("--residuals", table.residuals, "Diagonal log-growth residuals for k = 3..k-max");
    table_cmd->add_flag("--ratios", table.ratios, "p_n^(k) / p_k^(k) for k = 1..k-max");
    table_cmd->add_option("--n", table_n, "Base index for --ratios")->capture_default_str();
    table_cmd->add_option("--k-max", table_k)->capture_default_str();

    auto* cache = app.add_subcommand("cache", "Tower cache maintenance");
    cache->require_subcommand(1);
    auto* cache_check = cache->add_subcommand("check", "Re-derive every cached record with nth_prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        Session s(cfg, out, err);
        if (*nth) {
            s.out() << nth_prime(parse_arg(a1)) << '\n';
        } else if (*pi) {
            s.out() << prime_count(parse_arg(a1)) << '\n';
        } else if (*iter) {
            Tower t = s.primes().iterate({parse_arg(a1), parse_arg(a2)});
            for (Natural v : t.values)
                s.out() << v << '\n';
            if (t.truncated) {
                s.err() << "tower truncated at level " << t.depth() << ": next level exceeds the budget "
                        << s.budget() << '\n';
                return kExitBudget;
            }
        } else if (*diag) {
            s.out() << s.primes().diag(parse_arg(a1)).value << '\n';
        } else if (*count_diag_cmd) {
            s.out() << count_diag(s.primes(), parse_arg(a1)) << '\n';
        } else if (*count_tower_cmd) {
            s.out() << count_tower(s.primes(), parse_arg(a1), parse_arg(a2)) << '\n';
        } else if (*verify) {
            return cmd_verify(s, suite, parse_arg(n_max), parse_arg(k_max));
        } else if (*certify) {
            return cmd_certify(s, cert);
        } else if (*table_cmd) {
            table.ratio_n = parse_arg(table_n);
            table.k_max = parse_arg(table_k);
            return cmd_table(s, table);
        } else if (*cache_check) {
            return cmd_cache_check(s);
        }
        s.out().flush();
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const SegmentTooLarge& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::bad_alloc&) {
        err << "resource limit: out of memory\n";
        return kExitBudget;
    } catch (const ThresholdViolated& e) {
        err << "violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

}  // namespace iterprimes
