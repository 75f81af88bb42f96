#pragma once

// Exact rational arithmetic on arbitrary-precision integers, plus binary
// digit extraction under the terminating-expansion convention (every value
// in [0,1) is written with infinitely many zero digits, so dyadic inputs
// get the 0.0111... -> 0.1000... form ruled out).
//
// All values are immutable after construction and all operations are pure.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace digitgraph {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    explicit Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    // Accepts "p", "-p", "p/q" with decimal digits. Throws std::invalid_argument.
    static Rational from_string(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    // True iff the denominator is a power of two (terminating binary expansion).
    bool is_dyadic() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Stored in lowest terms with positive denominator, so field equality
    // coincides with cross-product equality.
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    Int floor() const;

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    // Decimal expansion truncated toward zero to `places` fractional digits.
    std::string to_decimal(std::size_t places) const;
    double to_double() const;

private:
    Int num_;
    Int den_;
    void normalize();
};

// 2^k as an exact rational; k may be negative.
Rational pow2(std::int64_t k);

// Fractional part {r} = r - floor(r), always in [0,1).
Rational frac(const Rational& r);

// k-th binary digit (k >= 1) of {r} under the terminating convention,
// computed as floor(2^k {r}) mod 2. Runs in O(log k) multiplications on
// words of the denominator's size, so positions in the 10^7 range are cheap.
int bit(const Rational& r, std::uint64_t k);

// frac(2^e * r) without forming 2^e: modular exponentiation on the denominator.
Rational frac_shift(const Rational& r, std::uint64_t e);

}  // namespace digitgraph
