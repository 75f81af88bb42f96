#include "digitgraph/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace digitgraph {

namespace {

// Largest pi with (pi+1)^3 representable in 64 bits: 2642245^3 < 2^64.
constexpr std::uint64_t kMaxCubeRoot = 2642245;

}  // namespace

std::uint64_t pair_index(std::uint64_t i, std::uint64_t j) {
    if (i == 0 || j == 0) {
        throw std::invalid_argument("pair_index: indices start at 1");
    }
    std::uint64_t d = i + j - 1;
    if (d > (1ULL << 32)) {
        throw std::overflow_error("pair_index: diagonal out of 64-bit range");
    }
    return d * (d - 1) / 2 + i;
}

std::pair<std::uint64_t, std::uint64_t> pair_inverse(std::uint64_t k) {
    if (k == 0) {
        throw std::invalid_argument("pair_inverse: indices start at 1");
    }
    // Largest d with d(d-1)/2 < k.
    std::uint64_t d = static_cast<std::uint64_t>((1.0 + std::sqrt(8.0 * static_cast<double>(k))) / 2.0);
    while (d * (d - 1) / 2 >= k) --d;
    while ((d + 1) * d / 2 < k) ++d;
    std::uint64_t i = k - d * (d - 1) / 2;
    return {i, d - i + 1};
}

std::uint64_t s_of(std::uint64_t i, std::uint64_t j) {
    std::uint64_t k = pair_index(i, j);
    if (k + 1 > kMaxCubeRoot) {
        throw std::overflow_error("s_of: triple start exceeds 64-bit range");
    }
    std::uint64_t c = k + 1;
    return c * c * c;
}

std::uint64_t icbrt(std::uint64_t n) {
    std::uint64_t c = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n)));
    while (c > 0 && c > kMaxCubeRoot) --c;
    while (c > 0 && c * c * c > n) --c;
    while ((c + 1) <= kMaxCubeRoot && (c + 1) * (c + 1) * (c + 1) <= n) ++c;
    return c;
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    if (r >= (1ULL << 32)) r = (1ULL << 32) - 1;
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && (r + 1) < (1ULL << 32)) ++r;
    return r;
}

Classification classify(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("classify: positive integers only");
    }
    if (n >= 8) {
        std::uint64_t c = icbrt(n);
        if (c >= 2 && n - c * c * c <= 2) {
            auto [i, j] = pair_inverse(c - 1);
            return Classification{false, i, j, static_cast<int>(n - c * c * c)};
        }
    }
    return Classification{true};
}

std::uint64_t count_T(std::uint64_t N) {
    if (N == 0) {
        throw std::invalid_argument("count_T: positive integers only");
    }
    if (N < 8) {
        return N;
    }
    std::uint64_t cmax = icbrt(N);
    // Every triple below the last one is fully inside [1,N]; the last may be cut.
    std::uint64_t removed = 3 * (cmax - 2) + std::min<std::uint64_t>(3, N - cmax * cmax * cmax + 1);
    return N - removed;
}

}  // namespace digitgraph
