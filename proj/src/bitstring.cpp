#include "digitgraph/bitstring.hpp"

#include <stdexcept>

namespace digitgraph {

Rational BitString::value() const {
    Int mant = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            boost::multiprecision::bit_set(mant, static_cast<unsigned>(bits.size() - 1 - i));
        }
    }
    return Rational(std::move(mant)) * pow2(-static_cast<std::int64_t>(offset + bits.size() - 1));
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s += b ? '1' : '0';
    }
    return s;
}

BitString bits_window(const Rational& r, std::uint64_t from, std::uint64_t to) {
    if (from == 0 || from > to) {
        throw std::invalid_argument("bits_window: need 1 <= from <= to");
    }
    BitString w;
    w.offset = from;
    w.bits.reserve(to - from + 1);
    for (std::uint64_t k = from; k <= to; ++k) {
        w.bits.push_back(static_cast<std::uint8_t>(bit(r, k)));
    }
    return w;
}

}  // namespace digitgraph
