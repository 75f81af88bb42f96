#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digitgraph/construction.hpp"
#include "digitgraph/family.hpp"
#include "digitgraph/rational.hpp"

namespace digitgraph {

// One cell of the 2^N x 2^N grid on the unit square.
struct GridCell {
    std::uint64_t level = 0;
    std::uint64_t col = 0;
    std::uint64_t row = 0;

    bool operator==(const GridCell&) const = default;
};

// Cell containing the graph point (x, F(x) mod 1).  The row comes from the
// exact first N digits of F(x), so the assignment is never ambiguous.
GridCell occupy(const Rational& x, std::uint64_t N, const FunctionFamily& fam);

// The x-digit positions beyond column resolution that still move the row:
// {n² : n ∈ T∩[1,N], n² > N}, sorted.  Flipping any of them toggles one
// copied row digit while staying inside the same column.
std::vector<std::uint64_t> free_positions(std::uint64_t N);

// Bit budget of an exhaustive enumeration: N column bits plus the free
// positions above.
std::uint64_t relevant_bits(std::uint64_t N);

// Exact count of occupied cells at level N by enumerating one point per
// relevant bit pattern.  Only valid for all-constant families (anything
// else mixes every digit of x into the rows, so there is no finite pattern
// space); throws std::invalid_argument in that case and std::length_error
// when relevant_bits(N) > 26.
std::uint64_t box_count_exhaustive(std::uint64_t N, const FunctionFamily& fam);

// Seeded sampling count of occupied cells.  For all-constant families the
// samples walk a seeded affine bijection over the relevant bit patterns,
// so `samples` >= 2^relevant_bits(N) visits every pattern and reproduces
// the exhaustive count exactly.  Other families get `samples` independent
// random points (samples == 0 keeps doubling until the count grows by
// less than 0.1% per doubling).
std::uint64_t box_count_random(std::uint64_t N, std::uint64_t samples,
                               std::uint64_t seed, const FunctionFamily& fam);

struct BoxCountRow {
    std::uint64_t level = 0;
    std::string mode;  // "exhaustive" or "random"
    std::uint64_t samples = 0;
    std::uint64_t cells = 0;
};

struct BoxCountReport {
    std::vector<BoxCountRow> rows;

    // "N,mode,samples,cells,log2cells_over_N" with six-decimal ratios.
    std::string to_csv() const;
};

// Ordinary least-squares slope of log2(cells) against N.  Needs at least
// two rows at distinct levels; throws std::invalid_argument otherwise.
double slope_fit(const BoxCountReport& report);

// Column-measure test for one cell: sample x inside the cell's column and
// measure how often the graph point lands in the cell.
struct ProjectionReport {
    std::uint64_t level = 0;
    std::uint64_t col = 0;
    std::uint64_t row = 0;
    std::uint64_t samples = 0;  // actual count (rounded up to whole blocks)
    std::uint64_t matched = 0;
    std::string fraction;   // matched/samples as an exact fraction
    std::string bound;      // 2^-(M(N) - ceil(sqrt(N))) as an exact fraction
    bool within_bound = false;
    bool digits_agree = false;  // hits all share the constrained x-digits
    std::string verdict;        // "pass", "fail", or "unoccupied"

    bool passed() const { return verdict != "fail"; }
    std::string to_json() const;
};

// Samples are stratified: each block enumerates every pattern of the free
// positions once over a shared random tail, so at most one sample per
// block can satisfy the copied-digit constraints and the asserted bound
// fraction <= 2^-(M(N)-ceil(sqrt(N))) holds with certainty, not just in
// expectation.  Requires N <= 20.
ProjectionReport projection_check(std::uint64_t N, std::uint64_t col,
                                  std::uint64_t row, std::uint64_t samples,
                                  std::uint64_t seed, const FunctionFamily& fam);

}  // namespace digitgraph
