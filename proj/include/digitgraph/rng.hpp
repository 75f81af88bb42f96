#pragma once

// Seeded pseudo-randomness for campaigns and samplers.
//
// The generator is SplitMix64 (Steele/Lea/Flood, "Fast splittable
// pseudorandom number generators", OOPSLA 2014), fixed here so that seeded
// runs reproduce byte-for-byte across platforms and implementations:
//
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB
//   output = z ^ z>>31
//
// Per-trial streams: trial t of seed s starts from state
// mix(s) ^ mix(t + 0x6A09E667F3BCC909), where mix is one SplitMix64 output
// step applied to the argument. Distinct trials get decorrelated streams and
// campaign results are independent of how trials are scheduled.

#include "digitgraph/rational.hpp"

#include <cstdint>

namespace digitgraph {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Plain reduction; the modulo bias is < n/2^64 and
    // irrelevant for campaign sampling, while keeping the stream trivially
    // reproducible.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    bool flip() { return (next() & 1) != 0; }

    // nbits independent random bits as a nonnegative big integer.
    Int bits(std::uint64_t nbits);

    // Random dyadic in [0,1) with nbits random digits: (random nbits)/2^nbits.
    Rational dyadic(std::uint64_t nbits);

private:
    std::uint64_t state_;
};

// The documented per-trial stream derivation.
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial);

}  // namespace digitgraph
