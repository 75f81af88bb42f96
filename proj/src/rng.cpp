#include "digitgraph/rng.hpp"

namespace digitgraph {

Int SplitMix64::bits(std::uint64_t nbits) {
    Int v = 0;
    std::uint64_t full = nbits / 64;
    for (std::uint64_t w = 0; w < full; ++w) {
        v <<= 64;
        v |= next();
    }
    std::uint64_t rest = nbits % 64;
    if (rest > 0) {
        v <<= static_cast<unsigned>(rest);
        v |= next() >> (64 - rest);
    }
    return v;
}

Rational SplitMix64::dyadic(std::uint64_t nbits) {
    return Rational(bits(nbits), Int(1) << static_cast<unsigned>(nbits));
}

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    auto mix = [](std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    };
    return SplitMix64(mix(seed) ^ mix(trial + 0x6A09E667F3BCC909ULL));
}

}  // namespace digitgraph
