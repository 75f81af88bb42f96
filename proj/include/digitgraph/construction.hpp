#pragma once

#include <cstdint>
#include <string>

#include "digitgraph/dyadic.hpp"
#include "digitgraph/family.hpp"
#include "digitgraph/rational.hpp"

namespace digitgraph {

// Two-digit reader: g(s, a) = a_s 2^{-s} + a_{s+1} 2^{-s-1}, where a_k is
// the k-th fractional binary digit of a.  Depends on a only through
// frac(a), so it is 1-periodic and accepts any rational (negatives read
// the digits of their fractional part).
Dyadic g(std::uint64_t s, const Rational& a);

// Block term h_{ij}(x) = g(s_of(i,j), f_i(x) + x_j 2^{-s}).  Materializes
// 2^{-s} exactly, so only call this at small i, j; the digit path below
// is the cheap route.
Dyadic h(std::uint64_t i, std::uint64_t j, const Rational& x,
         const FunctionFamily& fam);

// Digit p ∈ {0,1} of h_{ij}(x), i.e. the binary digit of F at position
// s_of(i,j) + p.  Avoids 2^{-s}-sized numbers: adding 2^{-s} flips digit
// s and never disturbs digit s+1 (the carry moves toward the integer
// part), so both digits come straight from f_i(x).
int h_digit(std::uint64_t i, std::uint64_t j, int p, const Rational& x,
            const FunctionFamily& fam);

// Binary digit n of F(x): position n is either a copying position
// (n ∈ T, digit x_{n²}), one of the two live digits of some h_{ij}, or a
// structural zero (third position of a block, or a block whose i exceeds
// the family size).
int y_digit(std::uint64_t n, const Rational& x, const FunctionFamily& fam);

// First N digits of F(x), packed as an exact dyadic F_N(x) with
// F(x) − F_N(x) ∈ [0, 2^{-N}).
struct TruncatedValue {
    Dyadic value;
    std::uint64_t level = 0;

    Rational lower() const { return value.to_rational(); }
    Rational upper() const {
        return value.to_rational() + pow2(-static_cast<std::int64_t>(level));
    }
    // Digit string y_1 ... y_N, e.g. "1000000100".
    std::string digits() const;
};

TruncatedValue eval_F(const Rational& x, std::uint64_t N,
                      const FunctionFamily& fam);

// One-sided bracket for F(x) − f_i(x): the true value lies in
// [lower, lower + 2^{-level}).
struct Bracket {
    Rational lower;
    std::uint64_t level = 0;

    Rational upper() const {
        return lower + pow2(-static_cast<std::int64_t>(level));
    }
};

Bracket F_minus_f(std::uint64_t i, const Rational& x, std::uint64_t N,
                  const FunctionFamily& fam);

// Window of F's digits starting at position s, re-anchored at weight 1/2:
// Σ_{p<width} y_{s+p}(x) 2^{-(p+1)}.  This equals frac(2^{s-1} F(x))
// truncated to `width` digits, which is what the interval checks read.
Rational scaled_window(const Rational& x, std::uint64_t s, int width,
                       const FunctionFamily& fam);

}  // namespace digitgraph
