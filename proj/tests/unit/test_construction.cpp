#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "digitgraph/construction.hpp"
#include "digitgraph/partition.hpp"
#include "digitgraph/rng.hpp"
#include "oracle.hpp"

using namespace digitgraph;

namespace {

FunctionFamily constants(std::vector<Rational> cs) {
    std::vector<FamilyFunction> fns;
    for (auto& c : cs) fns.emplace_back(std::vector<Rational>{std::move(c)});
    return FunctionFamily(std::move(fns));
}

const FunctionFamily kZero = constants({Rational(0)});

FunctionFamily identity() {
    return FunctionFamily({FamilyFunction({Rational(0), Rational(1)})});
}

FunctionFamily mixed() {
    return FunctionFamily({FamilyFunction({Rational(0), Rational(1)}),
                           FamilyFunction({Rational(0), Rational(-1, 2)}),
                           FamilyFunction({Rational(1, 3), Rational(0), Rational(2)})});
}

// Random point that is dyadic, a third-offset rational, or plain random q.
Rational random_point(SplitMix64& rng) {
    Rational x = rng.dyadic(20);
    const std::uint64_t kind = rng.below(3);
    if (kind == 1) x += Rational(Int(rng.below(3)), Int(3));
    if (kind == 2) x += Rational(Int(rng.below(7)), Int(7));
    return frac(x);
}

}  // namespace

TEST_CASE("two-digit reader on frozen points") {
    CHECK(g(1, Rational(3, 4)) == Dyadic(3, 2));       // digits 1,1 -> 1/2+1/4
    CHECK(g(3, Rational(1, 4)) == Dyadic(0, 0));       // digits 0,0
    CHECK(g(2, Rational(9, 4)) == Dyadic(1, 2));       // periodic: reads 1/4
    CHECK(g(2, Rational(9, 4)) == g(2, Rational(1, 4)));
    CHECK(g(1, Rational(-1, 4)) == Dyadic(3, 2));      // frac(-1/4) = 3/4
    CHECK_THROWS_AS(g(0, Rational(1, 2)), std::domain_error);

    SplitMix64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t s = 1 + rng.below(40);
        const Rational a = random_point(rng);
        const Rational v = g(s, a).to_rational();
        // value is one of {0, 2^-s-1, 2^-s, 3*2^-s-1}
        const Rational step = pow2(-static_cast<std::int64_t>(s) - 1);
        CHECK(v >= Rational(0));
        CHECK(v <= step * 3);
        CHECK((v / step).is_integer());
    }
}

TEST_CASE("block terms at small indices") {
    CHECK(h(1, 1, Rational(1, 2), kZero) == Dyadic(1, 8));
    CHECK(h(1, 2, Rational(1, 4), kZero) == Dyadic(1, 27));
    CHECK(h(1, 1, Rational(1, 2), identity()) == Dyadic(1, 8));
    CHECK(h(2, 1, Rational(1, 2), mixed()).to_rational() ==
          g(64, Rational(-1, 4) + pow2(-64)).to_rational());

    // digit path agrees with the materialized block value everywhere
    SplitMix64 rng(32);
    const FunctionFamily fam = mixed();
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t i = 1 + rng.below(3);
        const std::uint64_t j = 1 + rng.below(3);
        const Rational x = random_point(rng);
        const Rational hv = h(i, j, x, fam).to_rational();
        const std::uint64_t s = s_of(i, j);
        CHECK(h_digit(i, j, 0, x, fam) == bit(hv, s));
        CHECK(h_digit(i, j, 1, x, fam) == bit(hv, s + 1));
        CHECK(bit(hv, s + 2) == 0);
    }
    CHECK_THROWS_AS(h_digit(1, 1, 2, Rational(1, 2), kZero), std::invalid_argument);
}

TEST_CASE("digits of F split into copying, block, and zero positions") {
    // x = 1/2, family {0}: digit 1 copies x_1, the (1,1) block reads 1 at 8
    CHECK(y_digit(1, Rational(1, 2), kZero) == 1);
    CHECK(y_digit(2, Rational(1, 2), kZero) == 0);
    CHECK(y_digit(8, Rational(1, 2), kZero) == 1);
    CHECK(y_digit(9, Rational(1, 2), kZero) == 0);
    CHECK(y_digit(10, Rational(1, 2), kZero) == 0);
    // blocks for family members that do not exist read 0
    CHECK(y_digit(64, Rational(1, 2), kZero) == 0);
    CHECK(y_digit(64, Rational(1, 2), mixed()) ==
          h_digit(2, 1, 0, Rational(1, 2), mixed()));

    CHECK_THROWS_AS(y_digit(0, Rational(1, 2), kZero), std::domain_error);
    CHECK_THROWS_AS(y_digit(8, Rational(3, 2), kZero), std::domain_error);
    CHECK_THROWS_AS(y_digit(1ULL << 33, Rational(1, 2), kZero), std::overflow_error);
}

TEST_CASE("truncated evaluation on frozen points") {
    const TruncatedValue v = eval_F(Rational(1, 2), 10, kZero);
    CHECK(v.value == Dyadic(129, 8));
    CHECK(v.digits() == "1000000100");
    CHECK(v.lower() == Rational(129, 256));
    CHECK(v.upper() == Rational(129, 256) + pow2(-10));

    CHECK(eval_F(Rational(1, 4), 30, kZero).value == Dyadic(1, 27));
    CHECK(eval_F(Rational(1, 4), 26, kZero).value == Dyadic(0, 0));
    CHECK(eval_F(Rational(0), 16, kZero).value == Dyadic(0, 0));
    CHECK(eval_F(Rational(0), 16, kZero).digits() == "0000000000000000");
    CHECK_THROWS_AS(eval_F(Rational(1), 8, kZero), std::domain_error);
}

TEST_CASE("both evaluation strategies match the literal oracle") {
    SplitMix64 rng(33);
    const FunctionFamily fams[] = {kZero, identity(), mixed()};
    for (int t = 0; t < 120; ++t) {
        const FunctionFamily& fam = fams[rng.below(3)];
        const Rational x = random_point(rng);
        const std::uint64_t N = 1 + rng.below(140);
        const TruncatedValue v = eval_F(x, N, fam);
        CHECK(v.lower() == digitgraph::testing::oracle_eval_F(x, N, fam));
        // digits re-derive one at a time
        const std::string ds = v.digits();
        REQUIRE(ds.size() == N);
        const std::uint64_t probe = 1 + rng.below(N);
        CHECK(ds[probe - 1] - '0' == y_digit(probe, x, fam));
    }
    // boundary where a block is cut in half: N = 125 keeps s, drops s+1
    const Rational x(5, 12);
    CHECK(eval_F(x, 125, mixed()).lower() ==
          digitgraph::testing::oracle_eval_F(x, 125, mixed()));
    CHECK(eval_F(x, 126, mixed()).lower() ==
          digitgraph::testing::oracle_eval_F(x, 126, mixed()));
}

TEST_CASE("refinement only ever appends digits") {
    SplitMix64 rng(34);
    for (int t = 0; t < 150; ++t) {
        const FunctionFamily fam = mixed();
        const Rational x = random_point(rng);
        const std::uint64_t N = 1 + rng.below(120);
        const std::uint64_t M = N + 1 + rng.below(120);
        const TruncatedValue lo = eval_F(x, N, fam);
        const TruncatedValue hi = eval_F(x, M, fam);
        const Rational d = hi.lower() - lo.lower();
        CHECK(d >= Rational(0));
        CHECK(d < pow2(-static_cast<std::int64_t>(N)));
        CHECK(hi.digits().substr(0, N) == lo.digits());
    }
}

TEST_CASE("difference bracket subtracts the family member exactly") {
    const Bracket b = F_minus_f(1, Rational(1, 2), 20, identity());
    CHECK(b.lower == Rational(1, 256));
    CHECK(b.upper() == Rational(1, 256) + pow2(-20));
    const Bracket c = F_minus_f(3, Rational(0), 8, mixed());
    CHECK(c.lower == eval_F(Rational(0), 8, mixed()).lower() - Rational(1, 3));
}

TEST_CASE("scaled windows re-anchor the digit stream") {
    CHECK(scaled_window(Rational(1, 2), 8, 9, kZero) == Rational(1, 2));
    CHECK(scaled_window(Rational(1, 2), 9, 9, kZero) == Rational(0));
    CHECK_THROWS_AS(scaled_window(Rational(1, 2), 0, 9, kZero), std::domain_error);
    CHECK_THROWS_AS(scaled_window(Rational(1, 2), 8, 0, kZero), std::invalid_argument);

    SplitMix64 rng(35);
    for (int t = 0; t < 100; ++t) {
        const FunctionFamily fam = mixed();
        const Rational x = random_point(rng);
        const std::uint64_t s = 1 + rng.below(40);
        const Rational w = scaled_window(x, s, 9, fam);
        CHECK(w == frac_shift(eval_F(x, s + 8, fam).lower(), s - 1));
    }
}
