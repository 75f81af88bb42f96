#include "digitgraph/rational.hpp"

#include <stdexcept>

namespace digitgraph {

namespace mp = boost::multiprecision;

void Rational::normalize() {
    if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    // Strip common powers of two first; the workload is dyadic-heavy and this
    // keeps huge power-of-two denominators out of the generic gcd.
    Int a = mp::abs(num_);
    unsigned tz = std::min(mp::lsb(a), mp::lsb(den_));
    if (tz > 0) {
        num_ >>= tz;
        den_ >>= tz;
        a >>= tz;
    }
    if (den_ == 1) {
        return;
    }
    // One Euclid step when the sizes are lopsided, then the library gcd.
    if (mp::msb(a) > mp::msb(den_) + 64) {
        a %= den_;
        if (a == 0) {
            num_ /= den_;
            den_ = 1;
            return;
        }
    }
    Int g = mp::gcd(a, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(std::string_view text) {
    auto parse_int = [](std::string_view s, std::string_view whole) -> Int {
        if (s.empty()) {
            throw std::invalid_argument("Rational: empty number in \"" + std::string(whole) + "\"");
        }
        std::size_t pos = 0;
        bool neg = false;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            pos = 1;
        }
        if (pos == s.size()) {
            throw std::invalid_argument("Rational: sign without digits in \"" + std::string(whole) + "\"");
        }
        Int v = 0;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9') {
                throw std::invalid_argument("Rational: bad character '" + std::string(1, s[pos]) +
                                            "' in \"" + std::string(whole) + "\"");
            }
            v = v * 10 + (s[pos] - '0');
        }
        return neg ? Int(-v) : v;
    };

    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, text));
    }
    Int n = parse_int(text.substr(0, slash), text);
    Int d = parse_int(text.substr(slash + 1), text);
    return Rational(std::move(n), std::move(d));
}

bool Rational::is_dyadic() const {
    return (den_ & (den_ - 1)) == 0;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Int Rational::floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) {
        --q;
    }
    return q;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/" + den_.str();
    }
    return s;
}

std::string Rational::to_decimal(std::size_t places) const {
    // Sign comes from the true value, not from floor (-1/3 -> "-0.333...").
    bool neg = num_ < 0;
    Rational mag = neg ? -*this : *this;
    Int mip = mag.floor();
    std::string s = (neg ? "-" : "") + mip.str();
    if (places == 0) {
        return s;
    }
    s += ".";
    Int n = mag.num() - mip * mag.den();
    const Int& d = mag.den();
    for (std::size_t i = 0; i < places; ++i) {
        n *= 10;
        Int digit = n / d;
        s += static_cast<char>('0' + digit.convert_to<int>());
        n -= digit * d;
    }
    return s;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational pow2(std::int64_t k) {
    Rational r;
    if (k >= 0) {
        return Rational(Int(1) << static_cast<unsigned>(k));
    }
    return Rational(Int(1), Int(1) << static_cast<unsigned>(-k));
}

Rational frac(const Rational& r) {
    Int rem = r.num() % r.den();
    if (rem < 0) {
        rem += r.den();
    }
    // gcd(num mod den, den) == gcd(num, den) == 1, so this stays reduced.
    return Rational(std::move(rem), r.den());
}

int bit(const Rational& r, std::uint64_t k) {
    if (k == 0) {
        throw std::invalid_argument("bit: digit positions start at 1");
    }
    Rational f = frac(r);
    if (f.is_zero()) {
        return 0;
    }
    const Int& a = f.num();
    const Int& b = f.den();
    if ((b & (b - 1)) == 0) {
        // b = 2^t with t >= 1; digit k of a*2^-t is bit t-k of the mantissa.
        std::uint64_t t = mp::msb(b);
        if (k > t) {
            return 0;
        }
        return mp::bit_test(a, static_cast<unsigned>(t - k)) ? 1 : 0;
    }
    // floor(2^k a / b) mod 2 == floor(M / b) where M = 2^k a mod 2b.
    Int m2 = b << 1;
    Int p = mp::powm(Int(2), Int(k), m2);
    Int M = (p * a) % m2;
    return M >= b ? 1 : 0;
}

Rational frac_shift(const Rational& r, std::uint64_t e) {
    Rational f = frac(r);
    if (f.is_zero() || f.den() == 1) {
        return Rational();
    }
    Int p = mp::powm(Int(2), Int(e), f.den());
    Int rem = (p * f.num()) % f.den();
    return Rational(std::move(rem), f.den());
}

}  // namespace digitgraph
