#include <doctest.h>

#include <stdexcept>

#include "digitgraph/rng.hpp"
#include "digitgraph/verification.hpp"

using namespace digitgraph;

namespace {

FunctionFamily zero() {
    return FunctionFamily({FamilyFunction({Rational(0)})});
}

FunctionFamily identity() {
    return FunctionFamily({FamilyFunction({Rational(0), Rational(1)})});
}

FunctionFamily mixed() {
    return FunctionFamily({FamilyFunction({Rational(0), Rational(1)}),
                           FamilyFunction({Rational(0), Rational(-1, 2)}),
                           FamilyFunction({Rational(1, 3), Rational(0), Rational(2)})});
}

}  // namespace

TEST_CASE("reading check on a worked example") {
    const ReadingCase c{3, {1, 7}, Rational(1, 4)};
    const ReadingResult r = check_reading(c);
    CHECK(r.read_zero == Rational(1, 32));
    CHECK(r.read_one == Rational(17, 32));
    CHECK(r.zero_ok);
    CHECK(r.one_ok);
    CHECK(r.passed());
}

TEST_CASE("reading cases reject colliding noise positions") {
    CHECK_THROWS_AS(check_reading(ReadingCase{3, {4}, Rational(1, 4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_reading(ReadingCase{3, {3}, Rational(1, 4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_reading(ReadingCase{3, {5}, Rational(1, 4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_reading(ReadingCase{3, {0}, Rational(1, 4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_reading(ReadingCase{0, {}, Rational(1, 4)}),
                    std::invalid_argument);
    CHECK(check_reading(ReadingCase{3, {2, 6}, Rational(1, 4)}).passed());
}

TEST_CASE("reading campaigns pass and reproduce byte for byte") {
    const CampaignReport a = reading_campaign(2000, 99);
    CHECK(a.cases == 2000);
    CHECK(a.failures == 0);
    CHECK(a.all_passed());
    CHECK(a.first_failure.empty());

    const CampaignReport b = reading_campaign(2000, 99);
    CHECK(a.to_json() == b.to_json());
    // a different seed is a different campaign, same verdict
    const CampaignReport c = reading_campaign(2000, 100);
    CHECK(c.failures == 0);
    CHECK(c.to_json() != a.to_json());
}

TEST_CASE("first differing digit") {
    CHECK(first_differing_digit(Rational(1, 2), Rational(1, 4)) == 1);
    CHECK(first_differing_digit(Rational(1, 2), Rational(3, 4)) == 2);
    CHECK(first_differing_digit(Rational(1, 3), Rational(1, 2)) == 1);
    CHECK(first_differing_digit(Rational(1, 3), Rational(1, 4)) == 4);
    CHECK(first_differing_digit(Rational(0), Rational(1, 1024)) == 10);
    CHECK_THROWS_AS(first_differing_digit(Rational(1, 3), Rational(1, 3)),
                    std::invalid_argument);
}

TEST_CASE("pair separation on a worked example") {
    const PairCheck pc = check_injectivity_pair(1, Rational(1, 4), Rational(3, 4),
                                                identity());
    CHECK(pc.j == 1);
    CHECK(pc.s == 8);
    CHECK(pc.read_zero == Rational(0));
    CHECK(pc.read_one == Rational(1, 2));
    CHECK(pc.zero_on_A);
    CHECK(pc.one_on_B);
    CHECK(pc.separated());
    CHECK(pc.passed());

    // swapping the arguments reads the same sides
    const PairCheck rev = check_injectivity_pair(1, Rational(3, 4), Rational(1, 4),
                                                 identity());
    CHECK(rev.read_zero == pc.read_zero);
    CHECK(rev.read_one == pc.read_one);

    CHECK_THROWS_AS(check_injectivity_pair(1, Rational(1, 4), Rational(1, 4), identity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_injectivity_pair(2, Rational(1, 4), Rational(3, 4), identity()),
                    std::out_of_range);
}

TEST_CASE("pair separation across deep blocks") {
    // points differing first at position 24 against the third family member
    // push the block start to (pair_index(3,24)+1)^3 = 35,611,289
    const Rational x(1, 1 << 24);
    const Rational y(0);
    const PairCheck pc = check_injectivity_pair(3, x, y, mixed());
    CHECK(pc.j == 24);
    CHECK(pc.s == 35611289);
    CHECK(pc.passed());
}

TEST_CASE("injectivity campaigns pass for every bundled family") {
    for (const FunctionFamily& fam : {zero(), identity(), mixed()}) {
        const CampaignReport r = injectivity_campaign(2000, 4242, fam, 24);
        CHECK(r.cases == 2000);
        CHECK(r.failures == 0);
        CHECK(r.first_failure.empty());
        const CampaignReport again = injectivity_campaign(2000, 4242, fam, 24);
        CHECK(r.to_json() == again.to_json());
    }
}

TEST_CASE("campaign reports serialize deterministically") {
    CampaignReport r;
    r.kind = "reading";
    r.seed = 7;
    r.cases = 3;
    r.passes = 2;
    r.failures = 1;
    r.first_failure = "trial 2: s=1 U=[] a=0";
    CHECK(r.to_json() ==
          R"({"cases":3,"failures":1,"first_failure":"trial 2: s=1 U=[] a=0","kind":"reading","passes":2,"seed":7})");
    CHECK_FALSE(r.all_passed());
}
