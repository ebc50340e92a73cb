#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iterprimes/bounds.hpp"
#include "iterprimes/certify.hpp"
#include "iterprimes/counting.hpp"
#include "iterprimes/errors.hpp"
#include "iterprimes/iterated.hpp"
#include "iterprimes/prime_engine.hpp"

namespace py = pybind11;
using namespace iterprimes;

namespace {

// Python ints are unbounded; route them through the decimal parser so values
// past 2^64 raise the library's range error instead of a conversion failure.
Natural to_natural(const py::int_& value)
{
    if (value < py::int_(0))
        throw DomainError("expected a non-negative integer");
    return parse_natural(std::string(py::str(value)));
}

// Exposes an HPReal as (decimal string, float).
py::tuple real(const HPReal& x)
{
    return py::make_tuple(x.to_string(), x.to_double());
}

py::dict tower_dict(const Tower& t)
{
    py::dict d;
    d["n"] = t.n;
    d["values"] = t.values;
    d["truncated"] = t.truncated;
    return d;
}

class PyIterated {
public:
    explicit PyIterated(Natural budget, const std::string& cache_path)
        : cache_(cache_path.empty() ? TowerCache() : TowerCache(cache_path)), primes_(cache_, budget)
    {
    }

    IteratedPrimes& primes() { return primes_; }

private:
    TowerCache cache_;
    IteratedPrimes primes_;
};

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Iterated primes p_n^(k), their counting functions, and explicit bounds.";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<OutOfSupportedRange>(m, "OutOfSupportedRange", base.ptr());
    py::register_exception<InvalidRange>(m, "InvalidRange", base.ptr());
    py::register_exception<SegmentTooLarge>(m, "SegmentTooLarge", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<InapplicableIndex>(m, "InapplicableIndex", base.ptr());
    py::register_exception<HypothesisViolated>(m, "HypothesisViolated", base.ptr());
    py::register_exception<CacheFormatError>(m, "CacheFormatError", base.ptr());
    py::register_exception<ThresholdViolated>(m, "ThresholdViolated", base.ptr());

    m.def("is_prime", [](const py::int_& n) { return is_prime(to_natural(n)); }, py::arg("n"),
          "Deterministic primality for 0 <= n < 2^64.");
    m.def("prime_count", [](const py::int_& x) { return prime_count(to_natural(x)); }, py::arg("x"),
          "pi(x), the number of primes <= x.");
    m.def("nth_prime", [](const py::int_& n) { return nth_prime(to_natural(n)); }, py::arg("n"),
          "The n-th prime, n >= 1.");
    m.def(
        "sieve_segment",
        [](const py::int_& lo, const py::int_& hi) { return sieve_segment(to_natural(lo), to_natural(hi)).primes(); },
        py::arg("lo"), py::arg("hi"), "Primes in [lo, hi], 2 <= lo <= hi.");

    py::class_<PyIterated>(m, "IteratedPrimes")
        .def(py::init<Natural, const std::string&>(), py::arg("budget") = kDefaultBudget,
             py::arg("cache_path") = std::string())
        .def("iterate", [](PyIterated& self, Natural n, Natural k) { return tower_dict(self.primes().iterate({n, k})); },
             py::arg("n"), py::arg("k"))
        .def("diag", [](PyIterated& self, Natural k) { return self.primes().diag(k).value; }, py::arg("k"))
        .def("ratio_to_diagonal",
             [](PyIterated& self, Natural n, Natural k_max) {
                 py::list out;
                 for (const auto& e : self.primes().ratio_to_diagonal(n, k_max))
                     out.append(py::make_tuple(e.k, e.numerator, e.denominator, e.ratio.to_double()));
                 return out;
             },
             py::arg("n"), py::arg("k_max"))
        .def("count_diag", [](PyIterated& self, Natural x) { return count_diag(self.primes(), x); }, py::arg("x"))
        .def("count_tower", [](PyIterated& self, Natural n, Natural x) { return count_tower(self.primes(), n, x); },
             py::arg("n"), py::arg("x"));

    m.def("comparator", [](Natural x, unsigned digits) { return real(comparator(x, digits)); }, py::arg("x"),
          py::arg("digits") = kDefaultDigits, "log x / log log x as (decimal string, float).");

    m.def(
        "check_bounds",
        [](Natural n, Natural k, Natural value, unsigned digits) {
            py::list out;
            for (const auto& c : check_bounds(n, k, value, digits).checks) {
                py::dict d;
                d["bound"] = std::string(bound_name(c.kind));
                d["applicable"] = c.applicable;
                d["lhs"] = c.lhs ? py::object(py::float_(c.lhs->to_double())) : py::object(py::none());
                d["rhs"] = c.rhs ? py::object(py::float_(c.rhs->to_double())) : py::object(py::none());
                d["holds"] = c.holds ? py::object(py::bool_(*c.holds)) : py::object(py::none());
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("value"), py::arg("digits") = kDefaultDigits);
    m.def("log_growth_residual", [](Natural k, Natural value) { return log_growth_residual(k, value).to_double(); },
          py::arg("k"), py::arg("value"));

    m.def("step_ratio_power",
          [](const std::string& x, unsigned digits) { return real(step_ratio_power(HPReal::parse(x, digits))); },
          py::arg("x"), py::arg("digits") = kCertifyDigits);
    m.def("closed_form_floor", [](unsigned digits) { return real(closed_form_floor(digits)); },
          py::arg("digits") = kCertifyDigits);
    m.def(
        "certify_default",
        [](unsigned digits) {
            const CertReport r = certify_threshold(default_cert_grid(digits));
            py::dict d;
            d["passed"] = r.passed();
            d["closed_form"] = r.closed_form.to_string();
            py::list rows;
            for (const auto& row : r.rows)
                rows.append(py::make_tuple(row.x.to_double(), row.value.to_string(), row.pass));
            d["rows"] = rows;
            return d;
        },
        py::arg("digits") = kCertifyDigits);
}
