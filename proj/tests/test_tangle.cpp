#include <cmath>

#include "doctest.h"
#include "supercoil/bounds.hpp"
#include "supercoil/diagram.hpp"
#include "supercoil/tangle.hpp"

using namespace supercoil;

namespace {

// Joins NE back to NW around the right and top, and SE to SW below.
PolyLink numerator_closure(const TangleGeometry& t) {
    const double r = 5.0 * norm(t.endpoints.nw);
    const auto& a = t.strand_a.vertices;
    const auto& b = t.strand_b.vertices;
    const bool a_ends_ne = a.back() == t.endpoints.ne;
    const bool a_starts_nw = a.front() == t.endpoints.nw;
    std::vector<Point3> arc_ne{{r, -r, 0}, {r, r, 0}, {-r, r, 0}};
    std::vector<Point3> arc_se{{-r, -r, 0}};
    // strand -> (arc after it, strand it feeds)
    const auto next_of = [&](bool is_a) {
        const bool ends_ne = is_a == a_ends_ne;
        const bool feeds_a = ends_ne == a_starts_nw;
        return std::pair{ends_ne ? arc_ne : arc_se, feeds_a};
    };
    PolyLink out;
    bool used[2] = {false, false};
    for (bool start : {true, false}) {
        if (used[start ? 0 : 1]) continue;
        Chain comp;
        bool cur = start;
        while (!used[cur ? 0 : 1]) {
            used[cur ? 0 : 1] = true;
            const auto& pts = cur ? a : b;
            comp.vertices.insert(comp.vertices.end(), pts.begin(), pts.end());
            const auto [arc, feeds] = next_of(cur);
            comp.vertices.insert(comp.vertices.end(), arc.begin(), arc.end());
            cur = feeds;
        }
        out.components.push_back(comp);
    }
    return out;
}

}  // namespace

TEST_CASE("core has m self-crossings of the requested sign") {
    for (int m : {0, 1, 2, 5, 12}) {
        for (int sign : {-1, 1}) {
            const CoreGeometry core = build_core(m, sign);
            CHECK(core.vertices.size() == static_cast<std::size_t>(m + 1));
            CHECK(core.writhe == sign * m);
            PolyLink line{{Chain{core.polyline(500.0), false}}};
            const auto xs = Projection(line, ProjectionDir::z()).crossings();
            CHECK(xs.size() == static_cast<std::size_t>(m));
        }
    }
}

TEST_CASE("placed vertices straddle the core") {
    const CoreGeometry core = build_core(4, -1);
    const auto [o, u] = place_vertices(core, {0.002, 0.1});
    for (std::size_t i = 0; i < o.size(); ++i) {
        CHECK(distance(o[i], core.vertices[i]) == doctest::Approx(0.002));
        CHECK(distance(u[i], core.vertices[i]) == doctest::Approx(0.002));
        const Point3 mid = 0.5 * (o[i] + u[i]);
        CHECK(distance(mid, core.vertices[i]) < 1e-12);
        CHECK(o[i].z > core.vertices[i].z);
        CHECK(core.vertices[i].z > u[i].z);
    }
    CHECK_THROWS_AS(place_vertices(core, {5.0, 0.1}), TangleError);
}

TEST_CASE("tangles for c = 1..60 use the minimal stick count") {
    for (int c = 1; c <= 60; ++c) {
        const TangleGeometry t = build_tangle(c, -1);
        CHECK(t.stick_count == lemma1_sticks(c));
        CHECK(check_embedded(t.as_open_link()).embedded);
        const CrossingAudit audit = crossing_audit(t);
        CHECK(audit.writhe_crossings == 2 * (c / 3));
        CHECK(audit.twist_crossings + audit.writhe_crossings == c);
        CHECK(audit.projected_crossings == c + 2 * (c / 3));
    }
}

TEST_CASE("audit examples") {
    const auto a7 = crossing_audit(build_tangle(7, -1));
    CHECK(a7.twist_crossings == 3);
    CHECK(a7.writhe_crossings == 4);
    const auto a6 = crossing_audit(build_tangle(6, -1));
    CHECK(a6.twist_crossings == 2);
    const auto a8 = crossing_audit(build_tangle(8, -1));
    CHECK(a8.twist_crossings == 4);
}

TEST_CASE("closed tangle is the (2,c) torus link") {
    for (int c = 1; c <= 30; ++c) {
        for (int sign : {-1, 1}) {
            const PolyLink closed = numerator_closure(build_tangle(c, sign));
            REQUIRE(check_embedded(closed).embedded);
            const Diagram d = extract_diagram(closed, ProjectionDir::z());
            CHECK(determinant(d) == c);
            for (int s : d.signs) CHECK(s == sign);
            if (d.pd.size() <= 16) {
                const Diagram ref = standard_diagram(ConwaySpec::parse(std::to_string(c), sign < 0));
                CHECK(same_bracket_up_to_orientation(d, ref));
            }
        }
    }
}

TEST_CASE("positive tangle mirrors the negative one") {
    for (int c : {2, 5, 9, 14}) {
        const TangleGeometry neg = build_tangle(c, -1);
        const TangleGeometry pos = build_tangle(c, 1);
        const TangleGeometry flip = mirrored(neg);
        REQUIRE(pos.strand_a.vertices.size() == flip.strand_a.vertices.size());
        for (std::size_t i = 0; i < pos.strand_a.vertices.size(); ++i)
            CHECK(distance(pos.strand_a.vertices[i], flip.strand_a.vertices[i]) < 1e-12);
    }
}

TEST_CASE("tangle input errors") {
    CHECK_THROWS_AS(build_tangle(0, -1), TangleError);
    CHECK_THROWS_AS(build_tangle(3, 2), TangleError);
    CHECK_THROWS_AS(build_tangle(5, -1, TanglePlacement{10.0, 0.1}), TangleError);
}
