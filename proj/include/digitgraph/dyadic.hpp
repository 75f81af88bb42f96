#pragma once

// Dyadic rationals m * 2^-k: exactly the reals with terminating binary
// expansion, used as the output type of truncated evaluations.

#include "digitgraph/rational.hpp"

#include <cstdint>
#include <string>

namespace digitgraph {

class Dyadic {
public:
    Dyadic() : mant_(0), scale_(0) {}
    Dyadic(Int mantissa, std::uint64_t scale) : mant_(std::move(mantissa)), scale_(scale) {
        normalize();
    }

    // Throws std::domain_error when r has a non-power-of-two denominator.
    static Dyadic from_rational(const Rational& r);

    const Int& mantissa() const { return mant_; }
    std::uint64_t scale() const { return scale_; }
    bool is_zero() const { return mant_ == 0; }

    Rational to_rational() const;

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-() const;
    Dyadic operator-(const Dyadic& o) const { return *this + -o; }

    bool operator==(const Dyadic& o) const { return mant_ == o.mant_ && scale_ == o.scale_; }
    std::strong_ordering operator<=>(const Dyadic& o) const;

    // "m/2^k", e.g. "129/2^8", "0/2^0".
    std::string to_string() const;

private:
    Int mant_;
    std::uint64_t scale_;
    // Canonical form: mantissa odd, or zero with scale 0, or scale already 0.
    void normalize();
};

}  // namespace digitgraph
