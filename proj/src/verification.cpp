#include "digitgraph/verification.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "digitgraph/partition.hpp"
#include "digitgraph/rng.hpp"

namespace digitgraph {

namespace {

const Rational kEighth(1, 8);
const Rational kQuarter(1, 4);
const Rational kFiveEighths(5, 8);
const Rational kThreeQuarters(3, 4);
const Rational kSlack(1, 512);  // 2^-9, one unread window tail

bool in_A_exact(const Rational& r) {
    return (r >= Rational(0) && r <= kEighth) ||
           (r >= kThreeQuarters && r < Rational(1));
}

bool in_B_exact(const Rational& r) {
    return r >= kQuarter && r <= kFiveEighths;
}

// Reading variants: the window undershoots the true value by at most 2^-9,
// so each target interval is extended that far downward (with the piece
// falling off 0 reappearing below 1).
bool in_A_read(const Rational& u) {
    return (u >= Rational(0) && u <= kEighth) ||
           (u >= kThreeQuarters - kSlack && u < Rational(1));
}

bool in_B_read(const Rational& u) {
    return u >= kQuarter - kSlack && u <= kFiveEighths;
}

}  // namespace

std::string ReadingCase::describe() const {
    std::string out = "s=" + std::to_string(s) + " U=[";
    for (std::size_t k = 0; k < U.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(U[k]);
    }
    out += "] a=" + a.to_string();
    return out;
}

ReadingResult check_reading(const ReadingCase& c) {
    if (c.s == 0) throw std::invalid_argument("positions start at 1");
    for (std::uint64_t u : c.U) {
        if (u == 0) throw std::invalid_argument("positions start at 1");
        if (u >= c.s && u <= c.s + 2) {
            throw std::invalid_argument(
                "noise position " + std::to_string(u) + " collides with block {" +
                std::to_string(c.s) + ".." + std::to_string(c.s + 2) + "}");
        }
    }
    Rational noise(0);
    for (std::uint64_t u : c.U) noise += pow2(-static_cast<std::int64_t>(u));

    const Rational step = pow2(-static_cast<std::int64_t>(c.s));
    const Rational value_zero = g(c.s, c.a).to_rational() + noise - c.a;
    const Rational value_one = g(c.s, c.a + step).to_rational() + noise - c.a;

    ReadingResult r;
    r.read_zero = frac_shift(value_zero, c.s - 1);
    r.read_one = frac_shift(value_one, c.s - 1);
    r.zero_ok = in_A_exact(r.read_zero);
    r.one_ok = in_B_exact(r.read_one);
    return r;
}

std::uint64_t first_differing_digit(const Rational& x, const Rational& y) {
    if (x == y) throw std::invalid_argument("points coincide");
    // Two distinct rationals with denominators q, q' differ by at least
    // 1/(q q'), so a disagreeing digit shows up within log2(q q') + 2.
    const std::uint64_t limit = boost::multiprecision::msb(x.den()) +
                                boost::multiprecision::msb(y.den()) + 2;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (bit(x, k) != bit(y, k)) return k;
    }
    throw std::logic_error("distinct points with identical digits");
}

PairCheck check_injectivity_pair(std::uint64_t i, const Rational& x,
                                 const Rational& y, const FunctionFamily& fam) {
    fam.at(i);  // validate the index up front
    PairCheck out;
    out.j = first_differing_digit(x, y);
    out.s = s_of(i, out.j);

    const Rational* zero_pt = &x;
    const Rational* one_pt = &y;
    if (bit(x, out.j) == 1) std::swap(zero_pt, one_pt);

    const auto reading = [&](const Rational& pt) {
        const Rational w = scaled_window(pt, out.s, 9, fam);
        return frac(w - frac_shift(fam.eval(i, pt), out.s - 1));
    };
    out.read_zero = reading(*zero_pt);
    out.read_one = reading(*one_pt);
    out.zero_on_A = in_A_read(out.read_zero);
    out.one_on_B = in_B_read(out.read_one);
    return out;
}

std::string CampaignReport::to_json() const {
    nlohmann::json j{{"kind", kind},         {"seed", seed},
                     {"cases", cases},       {"passes", passes},
                     {"failures", failures}, {"first_failure", first_failure}};
    return j.dump();
}

CampaignReport reading_campaign(std::uint64_t trials, std::uint64_t seed,
                                std::uint64_t max_s, std::uint64_t max_u) {
    if (max_s == 0) throw std::invalid_argument("max_s must be positive");
    CampaignReport rep;
    rep.kind = "reading";
    rep.seed = seed;
    rep.cases = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = trial_stream(seed, t);
        ReadingCase c;
        c.s = 1 + rng.below(max_s);
        const std::uint64_t want = rng.below(max_u + 1);
        while (c.U.size() < want) {
            const std::uint64_t p = 1 + rng.below(3 * max_s + 16);
            if (p >= c.s && p <= c.s + 2) continue;
            if (std::find(c.U.begin(), c.U.end(), p) != c.U.end()) continue;
            c.U.push_back(p);
        }
        std::sort(c.U.begin(), c.U.end());
        // integer part + random dyadic + possible third, possibly negated
        Rational a = Rational(static_cast<long long>(rng.below(3))) +
                     rng.dyadic(2 * max_s) +
                     Rational(static_cast<long long>(rng.below(3)), 3);
        if (rng.flip()) a = -a;
        c.a = a;

        const ReadingResult res = check_reading(c);
        if (res.passed()) {
            ++rep.passes;
        } else {
            ++rep.failures;
            if (rep.first_failure.empty()) {
                rep.first_failure = "trial " + std::to_string(t) + ": " + c.describe() +
                                    " read_zero=" + res.read_zero.to_string() +
                                    " read_one=" + res.read_one.to_string();
            }
        }
    }
    return rep;
}

CampaignReport injectivity_campaign(std::uint64_t trials, std::uint64_t seed,
                                    const FunctionFamily& fam,
                                    std::uint64_t bits) {
    if (bits == 0) throw std::invalid_argument("bits must be positive");
    CampaignReport rep;
    rep.kind = "injectivity";
    rep.seed = seed;
    rep.cases = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = trial_stream(seed, t);
        const Rational x = rng.dyadic(bits);
        Rational y = rng.dyadic(bits);
        while (y == x) y = rng.dyadic(bits);
        const std::uint64_t i = 1 + rng.below(fam.size());

        const PairCheck pc = check_injectivity_pair(i, x, y, fam);
        if (pc.passed()) {
            ++rep.passes;
        } else {
            ++rep.failures;
            if (rep.first_failure.empty()) {
                rep.first_failure = "trial " + std::to_string(t) + ": i=" +
                                    std::to_string(i) + " x=" + x.to_string() +
                                    " y=" + y.to_string() + " j=" + std::to_string(pc.j) +
                                    " s=" + std::to_string(pc.s) +
                                    " read_zero=" + pc.read_zero.to_string() +
                                    " read_one=" + pc.read_one.to_string();
            }
        }
    }
    return rep;
}

}  // namespace digitgraph
