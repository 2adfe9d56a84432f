#include "doctest.h"
#include "json.hpp"
#include "supercoil/io.hpp"
#include "supercoil/link.hpp"

using namespace supercoil;

TEST_CASE("geometry JSON round-trips exactly") {
    const PolyLink link = build_link(ConwaySpec({2, 3, 2}));
    const PolyLink back = parse_geometry_json(geometry_json(link));
    REQUIRE(back.components.size() == link.components.size());
    for (std::size_t k = 0; k < link.components.size(); ++k) {
        CHECK(back.components[k].closed);
        CHECK(back.components[k].vertices == link.components[k].vertices);
    }
    CHECK(geometry_json(back) == geometry_json(link));
}

TEST_CASE("geometry JSON errors") {
    CHECK_THROWS_AS(parse_geometry_json("{"), IoError);
    CHECK_THROWS_AS(parse_geometry_json("{\"parts\": []}"), IoError);
    CHECK_THROWS_AS(parse_geometry_json("{\"components\": [[[0, 0]]]}"), IoError);
    CHECK_THROWS_AS(parse_geometry_json("{\"components\": [[[0, 0, \"x\"]]]}"), IoError);
}

TEST_CASE("obj and csv") {
    const PolyLink square{{Chain{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1.0 / 3.0, 0}}, true}}};
    const std::string obj = to_obj(square);
    CHECK(obj.find("v 0 0.333333333333 0\n") != std::string::npos);
    CHECK(obj.find("l 1 2 3 4 1\n") != std::string::npos);
    const std::string csv = to_csv(square);
    CHECK(csv.rfind("component,vertex,x,y,z\n", 0) == 0);
    CHECK(csv.find("0,3,0,0.333333333333,0\n") != std::string::npos);

    const PolyLink open{{Chain{{{0, 0, 0}, {1, 0, 0}}, false}, Chain{{{0, 1, 0}, {1, 1, 0}}, false}}};
    CHECK(to_obj(open).find("l 1 2\nl 3 4\n") != std::string::npos);
}

TEST_CASE("tangle JSON") {
    const TangleGeometry t = build_tangle(7, -1);
    const auto j = nlohmann::json::parse(tangle_json(t));
    CHECK(j["c"] == 7);
    CHECK(j["sign"] == -1);
    CHECK(j["sticks"] == 8);
    CHECK(j["strands"].size() == 2);
    for (const char* e : {"NW", "NE", "SW", "SE"}) CHECK(j["endpoints"][e].size() == 3);
    CHECK(j["core"]["m"] == 2);
}

TEST_CASE("PD JSON round-trips") {
    const Diagram d = standard_diagram(ConwaySpec({3, 1, 2}));
    const Diagram e = parse_diagram_json(diagram_json(d));
    CHECK(e.pd == d.pd);
    CHECK(e.signs == d.signs);
    CHECK_THROWS(parse_diagram_json("{\"pd\": [[1, 2, 3, 4]], \"signs\": [1]}"));
    CHECK_THROWS_AS(parse_diagram_json("{\"signs\": []}"), IoError);
}

TEST_CASE("bounds JSON") {
    const auto j = nlohmann::json::parse(bounds_json(bounds_report(ConwaySpec({16, 16, 16, 16, 16}))));
    CHECK(j["c"] == 80);
    CHECK(j["stick_upper_bound"] == 63);
    CHECK(j["bigon_lower_bound"] == 72);
    CHECK(j["obstruction"] == true);
    const auto k = nlohmann::json::parse(bounds_json(bounds_report(ConwaySpec({1, 2, 1}))));
    CHECK(k["bigon_lower_bound"].is_null());
    CHECK(k["obstruction"].is_null());
}
