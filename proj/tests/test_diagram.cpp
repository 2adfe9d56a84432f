#include <functional>
#include <numeric>

#include "doctest.h"
#include "supercoil/bounds.hpp"
#include "supercoil/diagram.hpp"

using namespace supercoil;

namespace {

// Independent state sum over all 2^n smoothings.
BracketPolynomial brute_bracket(const Diagram& d) {
    const int n = static_cast<int>(d.pd.size());
    int max_label = 0;
    for (const auto& x : d.pd)
        for (int l : x) max_label = std::max(max_label, l);
    BracketPolynomial total;
    for (long s = 0; s < (1L << n); ++s) {
        std::vector<int> parent(max_label + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        int a_count = 0;
        for (int i = 0; i < n; ++i) {
            const auto& x = d.pd[i];
            if ((s >> i) & 1) {
                unite(x[0], x[3]);
                unite(x[1], x[2]);
            } else {
                ++a_count;
                unite(x[0], x[1]);
                unite(x[2], x[3]);
            }
        }
        int loops = 0;
        for (int l = 1; l <= max_label; ++l)
            if (find(l) == l) ++loops;
        BracketPolynomial term = BracketPolynomial::monomial(a_count - (n - a_count));
        for (int k = 1; k < loops; ++k) term = term * loop_value();
        total += term;
    }
    return total;
}

BracketPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
    BracketPolynomial p;
    for (const auto& [e, c] : terms) p += BracketPolynomial::monomial(e, c);
    return p;
}

}  // namespace

TEST_CASE("right-handed trefoil bracket") {
    const Diagram d = standard_diagram(ConwaySpec({3}));
    CHECK(d.crossing_count() == 3);
    CHECK(d.writhe() == 3);
    CHECK(kauffman_bracket(d) == poly({{-7, 1}, {-3, -1}, {5, -1}}));
    CHECK(normalized_bracket(d) == poly({{-4, 1}, {-12, 1}, {-16, -1}}));
    CHECK(brute_bracket(d) == kauffman_bracket(d));
}

TEST_CASE("mirror flips the normalized bracket") {
    const Diagram d = standard_diagram(ConwaySpec({3}, true));
    CHECK(d.writhe() == -3);
    CHECK(normalized_bracket(d) == poly({{4, 1}, {12, 1}, {16, -1}}));
}

TEST_CASE("Hopf link bracket") {
    const Diagram d = standard_diagram(ConwaySpec({2}));
    CHECK(d.component_count() == 2);
    CHECK(kauffman_bracket(d) == poly({{4, -1}, {-4, -1}}));
}

TEST_CASE("unknot diagram from a single crossing") {
    const Diagram d = standard_diagram(ConwaySpec({1}));
    CHECK(d.component_count() == 1);
    CHECK(normalized_bracket(d) == BracketPolynomial::monomial(0));
}

TEST_CASE("bracket agrees with brute force and determinant with continued fraction") {
    const std::vector<std::vector<int>> cases = {{1}, {2}, {5}, {2, 1, 2}, {3, 3, 3}, {2, 2, 2}, {1, 1, 1},
                                                 {4, 1, 3}, {2, 3, 1, 1, 2}, {3, 2, 2, 1, 2}, {2, 2, 2, 2, 2}};
    for (const auto& v : cases) {
        const ConwaySpec spec(v);
        const Diagram d = standard_diagram(spec);
        CAPTURE(spec.to_string());
        validate(d);
        CHECK(d.crossing_count() == static_cast<std::size_t>(spec.crossing_number()));
        CHECK(is_alternating(d));
        CHECK(is_connected(d));
        CHECK(kauffman_bracket(d) == brute_bracket(d));
        CHECK(determinant(d) == continued_fraction(spec).p);
        CHECK(faces(d).size() == d.crossing_count() + 2);
    }
}

TEST_CASE("bigon counts of the standard diagram") {
    CHECK(count_bigons(standard_diagram(ConwaySpec({5}))) == 5);
    CHECK(count_bigons(standard_diagram(ConwaySpec({3, 3, 3}))) == 6);
    CHECK(count_bigons(standard_diagram(ConwaySpec({2, 4, 2, 3, 2}))) == 8);
}

TEST_CASE("flypes preserve the link and the minimum bigon count matches the lower bound") {
    const std::vector<std::vector<int>> cases = {{2, 2, 2}, {3, 3, 3}, {2, 3, 4}, {2, 2, 2, 2, 2}, {3, 2, 4, 2, 3}};
    for (const auto& v : cases) {
        const ConwaySpec spec(v);
        CAPTURE(spec.to_string());
        const Diagram base = standard_diagram(spec);
        std::vector<int> split(v);
        for (std::size_t i = 1; i + 1 < v.size(); ++i) split[i] = v[i] / 2;
        const Diagram fl = flyped_diagram(spec, split);
        CHECK(is_alternating(fl));
        CHECK(same_bracket_up_to_orientation(base, fl));
        CHECK(min_bigons_over_flypes(spec) == lemma4_bound(spec));
    }
}

TEST_CASE("bracket budget") {
    CHECK_THROWS_AS(kauffman_bracket(standard_diagram(ConwaySpec({30}))), BudgetExceeded);
}

TEST_CASE("divided_by_loop rejects inexact division") {
    CHECK_THROWS_AS(BracketPolynomial::monomial(0).divided_by_loop(), DiagramError);
    CHECK((loop_value() * poly({{3, 2}, {-1, 1}})).divided_by_loop() == poly({{3, 2}, {-1, 1}}));
}
