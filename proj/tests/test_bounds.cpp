#include <boost/rational.hpp>

#include "doctest.h"
#include "supercoil/bounds.hpp"
#include "supercoil/diagram.hpp"

using namespace supercoil;

namespace {

// Every odd-length vector with entries in [lo, hi] and length <= max_n.
std::vector<ConwaySpec> family(int max_n, int lo, int hi) {
    std::vector<ConwaySpec> out;
    for (int n = 1; n <= max_n; n += 2) {
        std::vector<int> v(n, lo);
        for (;;) {
            out.emplace_back(v);
            int i = 0;
            while (i < n && v[i] == hi) v[i++] = lo;
            if (i == n) break;
            ++v[i];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("stick formula by residue") {
    CHECK(lemma1_sticks(6) == 8);
    CHECK(lemma1_sticks(7) == 8);
    CHECK(lemma1_sticks(8) == 9);
    for (int c = 1; c <= 300; ++c) {
        const boost::rational<int> cc(c);
        const boost::rational<int> exact = c % 3 == 0   ? cc * 2 / 3 + 4
                                           : c % 3 == 1 ? cc * 2 / 3 + boost::rational<int>(10, 3)
                                                        : cc * 2 / 3 + boost::rational<int>(11, 3);
        REQUIRE(exact.denominator() == 1);
        CHECK(lemma1_sticks(c) == exact.numerator());
    }
    CHECK_THROWS(lemma1_sticks(0));
}

TEST_CASE("upper bound examples") {
    CHECK(theorem2_bound(ConwaySpec({16, 16, 16, 16, 16})) == 63);
    CHECK(theorem2_bound(ConwaySpec({3, 3, 3})) == 15);
    CHECK(theorem2_bound(ConwaySpec({1})) == 5);
}

TEST_CASE("upper bound is the tangle sticks plus the frame") {
    for (const auto& spec : family(5, 1, 7)) {
        int sum = 0;
        for (int c : spec.twists()) sum += lemma1_sticks(c);
        // each tangle's four free sticks merge into the 2n+3 frame sticks
        CHECK(theorem2_bound(spec) == sum - 4 * spec.n() + 2 * spec.n() + 3);
    }
}

TEST_CASE("improvement threshold") {
    CHECK(improvement_threshold(ConwaySpec({16, 16, 16, 16, 16})));
    CHECK_FALSE(improvement_threshold(ConwaySpec({3})));
    CHECK(improvement_threshold(ConwaySpec({8})));
    CHECK(improvement_threshold(ConwaySpec({7})));
    for (const auto& spec : family(5, 1, 9)) {
        const int n = spec.n(), q = spec.residue_q(), r = spec.residue_r(), c = spec.crossing_number();
        CHECK(improvement_threshold(spec) == (6 * n + 1 - 2 * q - r < c));
        // solving bound < c + 2 exactly gives 6n + 3 - 2Q - R < c; the
        // stated threshold is two lower
        CHECK((theorem2_bound(spec) < previous_bound(spec)) == (6 * n + 3 - 2 * q - r < c));
    }
    // (5): 6 + 1 - 0 - 1 = 6 is not below 5, and 7 sticks equal c + 2
    CHECK_FALSE(improvement_threshold(ConwaySpec({5})));
    // (4): Q = 1 gives 5 < 4 false, bound 6 = c + 2
    CHECK_FALSE(improvement_threshold(ConwaySpec({4})));
}

TEST_CASE("bigon bound and obstruction") {
    const ConwaySpec fig({16, 16, 16, 16, 16});
    CHECK(lemma4_bound(fig) == 72);
    CHECK(theorem5_obstruction(fig));
    CHECK(lemma4_bound(ConwaySpec({2, 2, 2})) == 2);
    for (int n = 1; n <= 9; n += 2) CHECK(lemma4_bound(ConwaySpec(std::vector<int>(n, 2))) == 2);
    CHECK_THROWS_AS(lemma4_bound(ConwaySpec({2, 1, 2})), SpecError);
    CHECK_THROWS_AS(theorem5_obstruction(ConwaySpec({1})), SpecError);
    for (const auto& spec : family(5, 2, 9))
        if (theorem5_obstruction(spec)) CHECK(theorem2_bound(spec) < lemma4_bound(spec));
}

TEST_CASE("obstruction thresholds on the residue-extreme families") {
    for (int n = 1; n <= 9; n += 2) {
        // all entries divisible by 3: c = 3kn against 12n + 3
        for (int k = 1; k <= 12; ++k) {
            const ConwaySpec s(std::vector<int>(n, 3 * k));
            CHECK(theorem5_obstruction(s) == (12 * n + 3 < 3 * k * n));
        }
        for (int k = 1; k <= 12; ++k) {
            const ConwaySpec s(std::vector<int>(n, 3 * k + 1));
            CHECK(theorem5_obstruction(s) == (10 * n + 3 < (3 * k + 1) * n));
        }
    }
}

TEST_CASE("continued fraction") {
    CHECK(continued_fraction(ConwaySpec({3})) == Fraction{3, 1});
    CHECK(continued_fraction(ConwaySpec({7})) == Fraction{7, 1});
    // 2 + 1/(2 + 1/2) = 12/5
    CHECK(continued_fraction(ConwaySpec({2, 2, 2})) == Fraction{12, 5});
    for (const auto& spec : family(5, 1, 4)) {
        if (spec.crossing_number() > 14) continue;
        CHECK(continued_fraction(spec).p == determinant(standard_diagram(spec)));
    }
    CHECK_THROWS_AS(continued_fraction(ConwaySpec(std::vector<int>(41, 1000))), std::overflow_error);
}

TEST_CASE("bounds report") {
    const BoundsReport r = bounds_report(ConwaySpec({16, 16, 16, 16, 16}));
    CHECK(r.crossing_number == 80);
    CHECK(r.tangle_count == 5);
    CHECK(r.residue_q == 5);
    CHECK(r.stick_upper_bound == 63);
    CHECK(r.bigon_lower_bound == 72);
    CHECK(r.obstruction == true);
    CHECK(r.tangle_sticks == std::vector<int>(5, 14));

    const BoundsReport t = bounds_report(ConwaySpec({3, 3, 3}));
    CHECK(t.stick_upper_bound == 15);
    CHECK(t.previous_bound == 11);
    CHECK_FALSE(t.improvement);

    const BoundsReport u = bounds_report(ConwaySpec({9, 9, 9}));
    CHECK(u.stick_upper_bound == 27);
    CHECK(u.previous_bound == 29);
    CHECK(u.improvement);

    const BoundsReport ones = bounds_report(ConwaySpec({1, 2, 1}));
    CHECK_FALSE(ones.bigon_lower_bound.has_value());
    CHECK_FALSE(ones.obstruction.has_value());
}
