// Python bindings: thin adapters over the exact-arithmetic core.  Rationals
// cross the boundary as "p/q" strings and dyadics as "m/2^k" strings, so no
// precision is lost; reports come back as plain dicts.

#include <pybind11/pybind11.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "digitgraph/bitstring.hpp"
#include "digitgraph/construction.hpp"
#include "digitgraph/dimension.hpp"
#include "digitgraph/family.hpp"
#include "digitgraph/partition.hpp"
#include "digitgraph/rational.hpp"
#include "digitgraph/verification.hpp"

namespace py = pybind11;

namespace {

using namespace digitgraph;

Rational unit_point(const std::string& text) {
    const Rational x = Rational::from_string(text);
    if (x < Rational(0) || x >= Rational(1)) {
        throw std::domain_error("x = " + text + " outside [0,1)");
    }
    return x;
}

py::dict campaign_dict(const CampaignReport& rep) {
    py::dict d;
    d["kind"] = rep.kind;
    d["seed"] = rep.seed;
    d["cases"] = rep.cases;
    d["passes"] = rep.passes;
    d["failures"] = rep.failures;
    d["first_failure"] = rep.first_failure;
    return d;
}

}  // namespace

PYBIND11_MODULE(_digitgraph, m) {
    m.doc() = "exact evaluation and verification of a plane-filling digit graph";

    m.def(
        "bit",
        [](const std::string& r, std::uint64_t k) {
            return bit(Rational::from_string(r), k);
        },
        py::arg("r"), py::arg("k"),
        "k-th binary digit (1-based) of frac(r), terminating expansions only");

    m.def(
        "digit_window",
        [](const std::string& r, std::uint64_t first, std::uint64_t last) {
            return bits_window(Rational::from_string(r), first, last).to_string();
        },
        py::arg("r"), py::arg("first"), py::arg("last"),
        "binary digits of frac(r) at positions first..last as a 0/1 string");

    m.def(
        "classify",
        [](std::uint64_t n) {
            const Classification c = classify(n);
            py::dict d;
            d["n"] = n;
            d["in_T"] = c.in_T;
            if (!c.in_T) {
                d["i"] = c.i;
                d["j"] = c.j;
                d["position"] = c.position;
                d["s"] = n - static_cast<std::uint64_t>(c.position);
            }
            return d;
        },
        py::arg("n"), "membership of position n: in T, or (i, j, offset) in its block");

    m.def("count_T", &count_T, py::arg("N"), "size of T ∩ [1,N]");

    m.def(
        "y_digit",
        [](std::uint64_t n, const std::string& x, const std::string& family) {
            return y_digit(n, unit_point(x), parse_family(family));
        },
        py::arg("n"), py::arg("x"), py::arg("family"),
        "n-th binary digit of F(x) for the given family (JSON text)");

    m.def(
        "eval_F",
        [](const std::string& x, std::uint64_t bits, const std::string& family) {
            const TruncatedValue v = eval_F(unit_point(x), bits, parse_family(family));
            py::dict d;
            d["value"] = v.value.to_string();
            d["digits"] = v.digits();
            d["decimal"] = v.lower().to_decimal(12);
            d["lower"] = v.lower().to_string();
            d["upper"] = v.upper().to_string();
            return d;
        },
        py::arg("x"), py::arg("bits"), py::arg("family"),
        "F(x) truncated to the first `bits` digits, with exact tail bracket");

    m.def(
        "F_minus_f",
        [](const std::string& x, std::uint64_t bits, std::uint64_t i,
           const std::string& family) {
            const Bracket b = F_minus_f(i, unit_point(x), bits, parse_family(family));
            py::dict d;
            d["lower"] = b.lower.to_string();
            d["upper"] = b.upper().to_string();
            return d;
        },
        py::arg("x"), py::arg("bits"), py::arg("i"), py::arg("family"),
        "exact bracket for F(x) - f_i(x) from the first `bits` digits of F");

    m.def(
        "check_reading",
        [](std::uint64_t trials, std::uint64_t seed) {
            return campaign_dict(reading_campaign(trials, seed));
        },
        py::arg("trials"), py::arg("seed"),
        "seeded campaign over the two-digit reading intervals");

    m.def(
        "check_injective",
        [](std::uint64_t trials, std::uint64_t seed, const std::string& family,
           std::uint64_t bits) {
            return campaign_dict(
                injectivity_campaign(trials, seed, parse_family(family), bits));
        },
        py::arg("trials"), py::arg("seed"), py::arg("family"), py::arg("bits") = 24,
        "seeded campaign of pair-separation readings against the family");

    m.def(
        "box_count_exhaustive",
        [](std::uint64_t N, const std::string& family) {
            return box_count_exhaustive(N, parse_family(family));
        },
        py::arg("N"), py::arg("family"),
        "exact occupied-cell count at level N (all-constant families)");

    m.def(
        "box_count_random",
        [](std::uint64_t N, std::uint64_t samples, std::uint64_t seed,
           const std::string& family) {
            return box_count_random(N, samples, seed, parse_family(family));
        },
        py::arg("N"), py::arg("samples"), py::arg("seed"), py::arg("family"),
        "seeded sampled occupied-cell count at level N");

    m.def(
        "occupy",
        [](const std::string& x, std::uint64_t N, const std::string& family) {
            const GridCell c = occupy(unit_point(x), N, parse_family(family));
            py::dict d;
            d["level"] = c.level;
            d["col"] = c.col;
            d["row"] = c.row;
            return d;
        },
        py::arg("x"), py::arg("N"), py::arg("family"),
        "grid cell of the graph point (x, F(x) mod 1) at level N");

    m.def(
        "projection_check",
        [](std::uint64_t N, std::uint64_t col, std::uint64_t row,
           std::uint64_t samples, std::uint64_t seed, const std::string& family) {
            const ProjectionReport r =
                projection_check(N, col, row, samples, seed, parse_family(family));
            py::dict d;
            d["level"] = r.level;
            d["col"] = r.col;
            d["row"] = r.row;
            d["samples"] = r.samples;
            d["matched"] = r.matched;
            d["fraction"] = r.fraction;
            d["bound"] = r.bound;
            d["within_bound"] = r.within_bound;
            d["digits_agree"] = r.digits_agree;
            d["verdict"] = r.verdict;
            return d;
        },
        py::arg("N"), py::arg("col"), py::arg("row"), py::arg("samples"),
        py::arg("seed"), py::arg("family"),
        "column-measure test for one grid cell");
}
