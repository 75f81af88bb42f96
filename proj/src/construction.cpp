#include "digitgraph/construction.hpp"

#include <stdexcept>

#include "digitgraph/partition.hpp"

namespace digitgraph {

namespace {

void require_unit_interval(const Rational& x) {
    if (x < Rational(0) || x >= Rational(1)) {
        throw std::domain_error("argument " + x.to_string() + " outside [0,1)");
    }
}

}  // namespace

Dyadic g(std::uint64_t s, const Rational& a) {
    if (s == 0) throw std::domain_error("digit positions start at 1");
    const int hi = bit(a, s);
    const int lo = bit(a, s + 1);
    Int mant = Int(hi) * 2 + lo;
    return Dyadic(mant, s + 1);
}

Dyadic h(std::uint64_t i, std::uint64_t j, const Rational& x,
         const FunctionFamily& fam) {
    const std::uint64_t s = s_of(i, j);
    Rational v = fam.eval(i, x);
    if (bit(x, j) == 1) v = v + pow2(-static_cast<std::int64_t>(s));
    return g(s, v);
}

int h_digit(std::uint64_t i, std::uint64_t j, int p, const Rational& x,
            const FunctionFamily& fam) {
    if (p != 0 && p != 1) {
        throw std::invalid_argument("h only has live digits at offsets 0 and 1");
    }
    const std::uint64_t s = s_of(i, j);
    const Rational w = fam.eval(i, x);
    if (p == 1) return bit(w, s + 1);
    const int b = bit(w, s);
    return bit(x, j) == 1 ? 1 - b : b;
}

int y_digit(std::uint64_t n, const Rational& x, const FunctionFamily& fam) {
    if (n == 0) throw std::domain_error("digit positions start at 1");
    if (n > 0xFFFFFFFFull) {
        throw std::overflow_error("digit position too large: n^2 must fit in 64 bits");
    }
    require_unit_interval(x);
    const Classification c = classify(n);
    if (c.in_T) return bit(x, n * n);
    if (c.position == 2) return 0;          // third slot of a block is always 0
    if (c.i > fam.size()) return 0;         // block for an absent family member
    return h_digit(c.i, c.j, c.position, x, fam);
}

std::string TruncatedValue::digits() const {
    std::string out(level, '0');
    const Int& m = value.mantissa();
    // digit p of the value is bit (level - p) of the mantissa once the
    // mantissa is aligned to scale `level`
    const std::uint64_t shift = level - value.scale();
    for (std::uint64_t p = 1; p <= level; ++p) {
        if (level - p >= shift &&
            boost::multiprecision::bit_test(m, static_cast<unsigned>(level - p - shift))) {
            out[p - 1] = '1';
        }
    }
    return out;
}

namespace {

// Accumulate digit y_n into a mantissa of width N.
void set_digit(Int& mant, std::uint64_t N, std::uint64_t n, int d) {
    if (d) boost::multiprecision::bit_set(mant, static_cast<unsigned>(N - n));
}

}  // namespace

TruncatedValue eval_F(const Rational& x, std::uint64_t N,
                      const FunctionFamily& fam) {
    require_unit_interval(x);
    if (N > 0xFFFFFFFFull) {
        throw std::overflow_error("truncation level too large");
    }
    Int mant = 0;
    if (N == 0) return TruncatedValue{Dyadic(0, 0), 0};

    if (x.is_dyadic()) {
        // Dyadic x: only finitely many digits of x are set, so the copying
        // positions stop contributing once n² exceeds x's scale, and the
        // blocks sit at the cubes s = c³ ≤ N.
        const std::uint64_t t = boost::multiprecision::msb(x.den());
        const std::uint64_t n_hi = std::min<std::uint64_t>(N, isqrt(t));
        for (std::uint64_t n = 1; n <= n_hi; ++n) {
            if (classify(n).in_T) set_digit(mant, N, n, bit(x, n * n));
        }
        for (std::uint64_t c = 2; c * c * c <= N; ++c) {
            const std::uint64_t s = c * c * c;
            const auto [pi, pj] = pair_inverse(c - 1);
            if (pi > fam.size()) continue;
            set_digit(mant, N, s, h_digit(pi, pj, 0, x, fam));
            if (s + 1 <= N) set_digit(mant, N, s + 1, h_digit(pi, pj, 1, x, fam));
        }
    } else {
        for (std::uint64_t n = 1; n <= N; ++n) {
            set_digit(mant, N, n, y_digit(n, x, fam));
        }
    }
    return TruncatedValue{Dyadic(mant, N), N};
}

Bracket F_minus_f(std::uint64_t i, const Rational& x, std::uint64_t N,
                  const FunctionFamily& fam) {
    const TruncatedValue t = eval_F(x, N, fam);
    return Bracket{t.lower() - fam.eval(i, x), N};
}

Rational scaled_window(const Rational& x, std::uint64_t s, int width,
                       const FunctionFamily& fam) {
    if (s == 0) throw std::domain_error("digit positions start at 1");
    if (width < 1) throw std::invalid_argument("window width must be positive");
    Int mant = 0;
    for (int p = 0; p < width; ++p) {
        if (y_digit(s + p, x, fam)) {
            boost::multiprecision::bit_set(mant, static_cast<unsigned>(width - 1 - p));
        }
    }
    return Dyadic(mant, static_cast<std::uint64_t>(width)).to_rational();
}

}  // namespace digitgraph
