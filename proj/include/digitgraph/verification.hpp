#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digitgraph/construction.hpp"
#include "digitgraph/family.hpp"
#include "digitgraph/rational.hpp"

namespace digitgraph {

// One instance of the two-digit reading argument: read position s of a
// number a while arbitrary extra digits sit at the positions in U.  U must
// avoid the reserved block {s, s+1, s+2}; a may be any rational.
struct ReadingCase {
    std::uint64_t s = 1;
    std::vector<std::uint64_t> U;
    Rational a;

    std::string describe() const;
};

// Exact interval memberships for the two reader outcomes.  The digit-0
// form A = g(s,a) + Σ_{u∈U} 2^{-u} − a must satisfy
// frac(2^{s-1} A) ∈ [0,1/8] ∪ [3/4,1); the digit-1 form
// B = g(s, 2^{-s}+a) + Σ_{u∈U} 2^{-u} − a must satisfy
// frac(2^{s-1} B) ∈ [1/4,5/8].  Both are checked in exact arithmetic.
struct ReadingResult {
    Rational read_zero;
    Rational read_one;
    bool zero_ok = false;
    bool one_ok = false;

    bool passed() const { return zero_ok && one_ok; }
};

ReadingResult check_reading(const ReadingCase& c);

// Separation certificate for one pair x ≠ y against family member i.
// j is the first digit where x and y differ and s the block position
// assigned to (i, j).  Each point's reading is
// frac(window − frac(2^{s-1} f_i(point))), where the window holds the nine
// digits of F starting at s, so the true value frac(2^{s-1}(F − f_i)) sits
// within 2^{-9} above the reading.  The acceptance sets below are the
// target intervals widened one-sidedly by that 2^{-9}, which keeps them
// disjoint: a digit-0 reading and a digit-1 reading can never coincide.
struct PairCheck {
    std::uint64_t j = 0;
    std::uint64_t s = 0;
    Rational read_zero;  // reading for the point whose j-th digit is 0
    Rational read_one;   // reading for the point whose j-th digit is 1
    bool zero_on_A = false;
    bool one_on_B = false;

    bool separated() const { return read_zero != read_one; }
    bool passed() const { return zero_on_A && one_on_B && separated(); }
};

PairCheck check_injectivity_pair(std::uint64_t i, const Rational& x,
                                 const Rational& y, const FunctionFamily& fam);

// Position of the first binary digit where x and y disagree.
// Throws std::invalid_argument when x == y.
std::uint64_t first_differing_digit(const Rational& x, const Rational& y);

// Outcome of a seeded campaign; serializes deterministically.
struct CampaignReport {
    std::string kind;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    std::string first_failure;  // empty when everything passed

    bool all_passed() const { return failures == 0 && passes == cases; }
    std::string to_json() const;
};

// Seeded random reading cases: s ≤ max_s, |U| ≤ max_u, and a drawn as a
// signed mix of a random dyadic, a random integer part, and a third
// (so non-terminating expansions are exercised).
CampaignReport reading_campaign(std::uint64_t trials, std::uint64_t seed,
                                std::uint64_t max_s = 64,
                                std::uint64_t max_u = 16);

// Seeded random distinct dyadic pairs with `bits` digits, each checked
// against a uniformly chosen family member.
CampaignReport injectivity_campaign(std::uint64_t trials, std::uint64_t seed,
                                    const FunctionFamily& fam,
                                    std::uint64_t bits = 24);

}  // namespace digitgraph
