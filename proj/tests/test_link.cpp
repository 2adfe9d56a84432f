#include "doctest.h"
#include "supercoil/bounds.hpp"
#include "supercoil/diagram.hpp"
#include "supercoil/link.hpp"

using namespace supercoil;

TEST_CASE("frame stick counts") {
    CHECK(build_frame(ConwaySpec({3})).stick_count() == 5);
    CHECK(build_frame(ConwaySpec({2, 2, 2})).stick_count() == 9);
    CHECK(build_frame(ConwaySpec({1, 1, 1, 1, 1})).stick_count() == 13);
    for (int n = 3; n <= 21; n += 2) {
        const FrameGraph f = build_frame(ConwaySpec(std::vector<int>(n, 2)));
        CHECK(f.stick_count() == static_cast<std::size_t>(2 * n + 3));
    }
}

TEST_CASE("frame signs alternate, negative on the left") {
    const FrameGraph f = build_frame(ConwaySpec({2, 3, 4}));
    CHECK(f.signs == std::vector<int>{1, -1, 1});
    const FrameGraph g = build_frame(ConwaySpec({2, 3, 4}, true));
    CHECK(g.signs == std::vector<int>{-1, 1, -1});
    for (const FrameGraph* h : {&f, &g})
        for (int k = 0; k < h->n; ++k) CHECK((h->signs[k] < 0) == (h->vertices[k].x < 0.0));
}

TEST_CASE("link examples") {
    const PolyLink trefoil = build_link(ConwaySpec({3}));
    CHECK(trefoil.stick_count() == 7);
    CHECK(component_count(trefoil) == 1);
    const PolyLink hopf = build_link(ConwaySpec({2}));
    CHECK(component_count(hopf) == 2);
    CHECK(hopf.stick_count() == 6);
    const PolyLink l222 = build_link(ConwaySpec({2, 2, 2}));
    CHECK(l222.stick_count() == 12);
    CHECK(component_count(l222) == 2);
    const PolyLink big = build_link(ConwaySpec({16, 16, 16, 16, 16}));
    CHECK(big.stick_count() == 63);
}

TEST_CASE("stick count realizes the upper bound") {
    for (const auto& v : std::vector<std::vector<int>>{
             {1}, {2}, {4}, {5}, {9}, {1, 1, 1}, {3, 1, 2}, {7, 8, 9}, {2, 3, 4, 5, 6}, {1, 12, 1, 12, 1}, {4, 4, 4, 4, 4, 4, 4}}) {
        const ConwaySpec spec(v);
        const PolyLink link = build_link(spec);
        CHECK(link.stick_count() == static_cast<std::size_t>(theorem2_bound(spec)));
    }
}

TEST_CASE("built links match the standard diagram bracket") {
    for (const auto& v : std::vector<std::vector<int>>{{2}, {3}, {4}, {5}, {2, 2, 2}, {3, 1, 2}, {2, 3, 2}, {1, 1, 1, 1, 1}, {2, 2, 3, 2, 2}}) {
        for (bool mirror : {false, true}) {
            const ConwaySpec spec(v, mirror);
            const PolyLink link = build_link(spec);
            const Diagram d = extract_diagram(link, ProjectionDir::z());
            CHECK_MESSAGE(same_bracket_up_to_orientation(d, standard_diagram(spec)), spec.to_string(), " mirror ", mirror);
        }
    }
}
