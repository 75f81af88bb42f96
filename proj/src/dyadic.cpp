#include "digitgraph/dyadic.hpp"

#include <stdexcept>

namespace digitgraph {

namespace mp = boost::multiprecision;

void Dyadic::normalize() {
    if (mant_ == 0) {
        scale_ = 0;
        return;
    }
    Int a = mp::abs(mant_);
    std::uint64_t tz = mp::lsb(a);
    std::uint64_t shift = std::min(tz, scale_);
    if (shift > 0) {
        mant_ >>= static_cast<unsigned>(shift);
        scale_ -= shift;
    }
}

Dyadic Dyadic::from_rational(const Rational& r) {
    if (!r.is_dyadic()) {
        throw std::domain_error("Dyadic: denominator is not a power of two: " + r.to_string());
    }
    std::uint64_t k = r.den() == 1 ? 0 : mp::msb(r.den());
    return Dyadic(r.num(), k);
}

Rational Dyadic::to_rational() const {
    return Rational(mant_, Int(1) << static_cast<unsigned>(scale_));
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    std::uint64_t k = std::max(scale_, o.scale_);
    Int m = (mant_ << static_cast<unsigned>(k - scale_)) +
            (o.mant_ << static_cast<unsigned>(k - o.scale_));
    return Dyadic(std::move(m), k);
}

Dyadic Dyadic::operator-() const {
    Dyadic d;
    d.mant_ = -mant_;
    d.scale_ = scale_;
    return d;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    std::uint64_t k = std::max(scale_, o.scale_);
    Int lhs = mant_ << static_cast<unsigned>(k - scale_);
    Int rhs = o.mant_ << static_cast<unsigned>(k - o.scale_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
    return mant_.str() + "/2^" + std::to_string(scale_);
}

}  // namespace digitgraph
