#pragma once

// A fixed partition of the positive integers into a density-1 set T and
// disjoint triples S_ij = {s_ij, s_ij+1, s_ij+2}, one triple per ordered
// pair (i,j) of positive integers.
//
// The pairing is the Cantor diagonal pi(i,j) = (i+j-1)(i+j-2)/2 + i and the
// triple placement is s_ij = (pi(i,j)+1)^3. Consecutive cubes differ by at
// least 7, so triples are disjoint, and [1,N] contains at most 3*N^(1/3)
// triple elements, so T has density 1. The scheme is a fixed constant of the
// library: every downstream number depends on it.

#include <cstdint>
#include <utility>

namespace digitgraph {

// Cantor diagonal pairing, bijective from ordered pairs onto {1,2,3,...}.
std::uint64_t pair_index(std::uint64_t i, std::uint64_t j);

// Inverse of pair_index. Throws std::invalid_argument for k == 0.
std::pair<std::uint64_t, std::uint64_t> pair_inverse(std::uint64_t k);

// Start of the triple assigned to (i,j): (pair_index(i,j)+1)^3.
// Throws std::overflow_error when the cube exceeds the 64-bit range.
std::uint64_t s_of(std::uint64_t i, std::uint64_t j);

struct Classification {
    bool in_T;
    // Valid only when !in_T:
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    int position = 0;  // n - s_ij, in {0,1,2}
};

// Total classification of n >= 1 into T or its unique triple slot.
Classification classify(std::uint64_t n);

// M(N) = |[1,N] ∩ T|.
std::uint64_t count_T(std::uint64_t N);

// floor(cbrt(n)) on 64-bit integers.
std::uint64_t icbrt(std::uint64_t n);

// floor(sqrt(n)) on 64-bit integers.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace digitgraph
