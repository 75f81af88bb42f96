#pragma once

// Finite windows of binary digit sequences, indexed from a starting position.

#include "digitgraph/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace digitgraph {

struct BitString {
    std::uint64_t offset = 1;
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    int at(std::size_t i) const { return bits.at(i); }

    // Value of the window: sum of bits[i] * 2^-(offset+i).
    Rational value() const;

    // "0101"-style rendering.
    std::string to_string() const;

    bool operator==(const BitString&) const = default;
};

// Digits bit(r, from) .. bit(r, to) inclusive. Throws std::invalid_argument
// when from > to or from == 0.
BitString bits_window(const Rational& r, std::uint64_t from, std::uint64_t to);

}  // namespace digitgraph
