#include "digitgraph/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "digitgraph/partition.hpp"
#include "digitgraph/rng.hpp"

namespace digitgraph {

namespace mp = boost::multiprecision;

namespace {

void require_level(std::uint64_t N, std::uint64_t max) {
    if (N < 1 || N > max) {
        throw std::invalid_argument("grid level must be in [1," + std::to_string(max) + "]");
    }
}

std::uint64_t pack(const GridCell& c) {
    return (c.col << c.level) | c.row;
}

// Point with column digits `col`, digits at `pos` given by the bits of
// `pattern`, and zeros elsewhere up to resolution R = max(N, pos.back()).
Rational pattern_point(std::uint64_t col, std::uint64_t N,
                       const std::vector<std::uint64_t>& pos,
                       std::uint64_t pattern) {
    const std::uint64_t R = pos.empty() ? N : pos.back();
    Int num = Int(col) << static_cast<unsigned>(R - N);
    for (std::size_t b = 0; b < pos.size(); ++b) {
        if (pattern >> b & 1) {
            mp::bit_set(num, static_cast<unsigned>(R - pos[b]));
        }
    }
    return Rational(std::move(num), Int(1) << static_cast<unsigned>(R));
}

std::uint64_t count_distinct(std::vector<std::uint64_t>& cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells.size();
}

}  // namespace

GridCell occupy(const Rational& x, std::uint64_t N, const FunctionFamily& fam) {
    require_level(N, 32);
    const TruncatedValue t = eval_F(x, N, fam);  // also validates x ∈ [0,1)
    const Int col = (x.num() << static_cast<unsigned>(N)) / x.den();
    const Int row = t.value.mantissa()
                    << static_cast<unsigned>(N - t.value.scale());
    return GridCell{N, col.convert_to<std::uint64_t>(),
                    row.convert_to<std::uint64_t>()};
}

std::vector<std::uint64_t> free_positions(std::uint64_t N) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (n * n > N && classify(n).in_T) out.push_back(n * n);
    }
    return out;
}

std::uint64_t relevant_bits(std::uint64_t N) {
    return N + free_positions(N).size();
}

std::uint64_t box_count_exhaustive(std::uint64_t N, const FunctionFamily& fam) {
    require_level(N, 26);
    if (!fam.all_constant()) {
        throw std::invalid_argument(
            "exhaustive counting needs a family of constants; rows of a "
            "non-constant member depend on every digit of x — use random mode");
    }
    const std::vector<std::uint64_t> pos = free_positions(N);
    const std::uint64_t B = N + pos.size();
    if (B > 26) {
        throw std::length_error("exhaustive enumeration over " + std::to_string(B) +
                                " bits exceeds the 26-bit budget");
    }
    std::vector<std::uint64_t> cells;
    cells.reserve(std::size_t(1) << B);
    const std::uint64_t e = pos.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << B); ++mask) {
        const std::uint64_t col = mask >> e;
        const std::uint64_t pattern = mask & ((std::uint64_t(1) << e) - 1);
        cells.push_back(pack(occupy(pattern_point(col, N, pos, pattern), N, fam)));
    }
    return count_distinct(cells);
}

std::uint64_t box_count_random(std::uint64_t N, std::uint64_t samples,
                               std::uint64_t seed, const FunctionFamily& fam) {
    require_level(N, 26);
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> cells;

    if (fam.all_constant()) {
        if (samples == 0) throw std::invalid_argument("sample count must be positive");
        // Walk a seeded affine bijection over the relevant bit patterns:
        // once samples covers 2^B consecutive t, every pattern has been
        // visited and the count agrees with exhaustive enumeration.
        const std::vector<std::uint64_t> pos = free_positions(N);
        const std::uint64_t B = N + pos.size();
        const std::uint64_t lo = (std::uint64_t(1) << B) - 1;
        const std::uint64_t a = rng.next() | 1;
        const std::uint64_t c = rng.next();
        cells.reserve(std::min<std::uint64_t>(samples, lo + 1));
        for (std::uint64_t t = 0; t < samples; ++t) {
            const std::uint64_t mask = (a * t + c) & lo;
            const std::uint64_t col = mask >> pos.size();
            const std::uint64_t pattern = mask & ((std::uint64_t(1) << pos.size()) - 1);
            cells.push_back(pack(occupy(pattern_point(col, N, pos, pattern), N, fam)));
        }
        return count_distinct(cells);
    }

    // Independent points at resolution N² + 64: enough digits that every
    // copied row position is randomized.  samples == 0 doubles the budget
    // until the distinct-cell count grows by less than 0.1% per doubling.
    const std::uint64_t res = N * N + 64;
    const auto draw = [&](std::uint64_t count) {
        for (std::uint64_t t = 0; t < count; ++t) {
            cells.push_back(pack(occupy(rng.dyadic(res), N, fam)));
        }
    };
    if (samples > 0) {
        draw(samples);
        return count_distinct(cells);
    }
    std::uint64_t total = 4096;
    draw(total);
    std::uint64_t seen = count_distinct(cells);
    while (total < (std::uint64_t(1) << 22)) {
        draw(total);
        total *= 2;
        const std::uint64_t now = count_distinct(cells);
        if ((now - seen) * 1000 < seen) {
            seen = now;
            break;
        }
        seen = now;
    }
    return seen;
}

std::string BoxCountReport::to_csv() const {
    std::string out = "N,mode,samples,cells,log2cells_over_N\n";
    char buf[64];
    for (const auto& r : rows) {
        const double ratio =
            r.cells > 0 && r.level > 0
                ? std::log2(static_cast<double>(r.cells)) / static_cast<double>(r.level)
                : 0.0;
        std::snprintf(buf, sizeof buf, "%.6f", ratio);
        out += std::to_string(r.level) + "," + r.mode + "," +
               std::to_string(r.samples) + "," + std::to_string(r.cells) + "," +
               buf + "\n";
    }
    return out;
}

double slope_fit(const BoxCountReport& report) {
    const std::size_t n = report.rows.size();
    if (n < 2) throw std::invalid_argument("slope needs at least two levels");
    double mx = 0, my = 0;
    for (const auto& r : report.rows) {
        mx += static_cast<double>(r.level);
        my += std::log2(static_cast<double>(r.cells));
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (const auto& r : report.rows) {
        const double dx = static_cast<double>(r.level) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log2(static_cast<double>(r.cells)) - my);
    }
    if (sxx == 0) throw std::invalid_argument("slope needs two distinct levels");
    return sxy / sxx;
}

std::string ProjectionReport::to_json() const {
    nlohmann::json j{{"level", level},
                     {"col", col},
                     {"row", row},
                     {"samples", samples},
                     {"matched", matched},
                     {"fraction", fraction},
                     {"bound", bound},
                     {"within_bound", within_bound},
                     {"digits_agree", digits_agree},
                     {"verdict", verdict}};
    return j.dump();
}

ProjectionReport projection_check(std::uint64_t N, std::uint64_t col,
                                  std::uint64_t row, std::uint64_t samples,
                                  std::uint64_t seed, const FunctionFamily& fam) {
    require_level(N, 20);
    if (col >> N || row >> N) {
        throw std::invalid_argument("cell indices must be below 2^N");
    }
    if (samples == 0) throw std::invalid_argument("sample count must be positive");

    const std::uint64_t M = count_T(N);
    const std::uint64_t rt = isqrt(N);
    const std::uint64_t ceil_rt = rt * rt == N ? rt : rt + 1;
    const Rational bound = pow2(static_cast<std::int64_t>(ceil_rt) -
                                static_cast<std::int64_t>(M));

    const std::vector<std::uint64_t> pos = free_positions(N);
    const std::uint64_t patterns = std::uint64_t(1) << pos.size();
    const std::uint64_t blocks = (samples + patterns - 1) / patterns;

    // The constrained digit positions of the final agreement check:
    // the column block [1,N] plus every copied position n².
    std::vector<std::uint64_t> constrained;
    for (std::uint64_t p = 1; p <= N; ++p) constrained.push_back(p);
    constrained.insert(constrained.end(), pos.begin(), pos.end());

    const std::uint64_t R = N * N + 64;  // tail resolution
    std::uint64_t matched = 0;
    bool digits_agree = true;
    std::vector<int> first_sig;

    for (std::uint64_t b = 0; b < blocks; ++b) {
        SplitMix64 rng = trial_stream(seed, b);
        // Shared random tail on positions N+1..R, with the stratified
        // positions cleared so each pattern sets them explicitly.
        Int base = (Int(col) << static_cast<unsigned>(R - N)) | rng.bits(R - N);
        for (std::uint64_t p : pos) {
            mp::bit_unset(base, static_cast<unsigned>(R - p));
        }
        for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
            Int num = base;
            for (std::size_t k = 0; k < pos.size(); ++k) {
                if (pattern >> k & 1) {
                    mp::bit_set(num, static_cast<unsigned>(R - pos[k]));
                }
            }
            const Rational x(std::move(num), Int(1) << static_cast<unsigned>(R));
            if (occupy(x, N, fam).row != row) continue;
            ++matched;
            std::vector<int> sig;
            sig.reserve(constrained.size());
            for (std::uint64_t p : constrained) sig.push_back(bit(x, p));
            if (first_sig.empty()) {
                first_sig = std::move(sig);
            } else if (sig != first_sig) {
                digits_agree = false;
            }
        }
    }

    ProjectionReport rep;
    rep.level = N;
    rep.col = col;
    rep.row = row;
    rep.samples = blocks * patterns;
    rep.matched = matched;
    const Rational fraction(Int(matched), Int(rep.samples));
    rep.fraction = fraction.to_string();
    rep.bound = bound.to_string();
    rep.within_bound = fraction <= bound;
    rep.digits_agree = digits_agree;
    if (matched == 0) {
        rep.verdict = "unoccupied";
    } else {
        rep.verdict = rep.within_bound && rep.digits_agree ? "pass" : "fail";
    }
    return rep;
}

}  // namespace digitgraph
