#include "supercoil/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace supercoil {

namespace {

using nlohmann::json;

json point(const Point3& p) { return json::array({p.x, p.y, p.z}); }

json chain_points(const Chain& c) {
    json out = json::array();
    for (const auto& p : c.vertices) out.push_back(point(p));
    return out;
}

Point3 read_point(const json& j) {
    if (!j.is_array() || j.size() != 3) throw IoError("vertex must be [x, y, z]");
    for (const auto& v : j)
        if (!v.is_number()) throw IoError("vertex coordinate is not a number");
    Point3 p{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    if (!p.finite()) throw IoError("vertex coordinate is not finite");
    return p;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("malformed JSON: ") + e.what());
    }
}

// %.12g
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string geometry_json(const PolyLink& link) {
    json comps = json::array();
    for (const auto& c : link.components) comps.push_back(chain_points(c));
    return json{{"components", comps}}.dump() + "\n";
}

PolyLink parse_geometry_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        throw IoError("geometry JSON needs a \"components\" array");
    PolyLink link;
    for (const auto& comp : j["components"]) {
        if (!comp.is_array()) throw IoError("component must be a list of vertices");
        Chain ch;
        for (const auto& v : comp) ch.vertices.push_back(read_point(v));
        link.components.push_back(std::move(ch));
    }
    return link;
}

std::string tangle_json(const TangleGeometry& t) {
    json core = json::array();
    for (const auto& p : t.core.vertices) core.push_back(point(p));
    const json j{
        {"c", t.c},
        {"sign", t.sign},
        {"sticks", t.stick_count},
        {"epsilon", t.epsilon},
        {"strands", json::array({chain_points(t.strand_a), chain_points(t.strand_b)})},
        {"endpoints",
         {{"NW", point(t.endpoints.nw)}, {"NE", point(t.endpoints.ne)}, {"SW", point(t.endpoints.sw)},
          {"SE", point(t.endpoints.se)}}},
        {"core", {{"m", t.core.m}, {"writhe", t.core.writhe}, {"vertices", core}}},
    };
    return j.dump() + "\n";
}

std::string diagram_json(const Diagram& d) {
    return json{{"pd", d.pd}, {"signs", d.signs}, {"free_loops", d.free_loops}}.dump() + "\n";
}

Diagram parse_diagram_json(const std::string& text) {
    const json j = parse(text);
    Diagram d;
    try {
        d.pd = j.at("pd").get<std::vector<std::array<int, 4>>>();
        d.signs = j.at("signs").get<std::vector<int>>();
        d.free_loops = j.value("free_loops", 0);
    } catch (const json::exception& e) {
        throw IoError(std::string("bad PD JSON: ") + e.what());
    }
    validate(d);
    return d;
}

std::string bounds_json(const BoundsReport& r) {
    json j{
        {"spec", r.spec.twists()},
        {"mirror", r.spec.mirror()},
        {"c", r.crossing_number},
        {"n", r.tangle_count},
        {"P", r.residue_p},
        {"Q", r.residue_q},
        {"R", r.residue_r},
        {"stick_upper_bound", r.stick_upper_bound},
        {"previous_bound", r.previous_bound},
        {"improvement", r.improvement},
        {"bigon_lower_bound", nullptr},
        {"obstruction", nullptr},
        {"tangle_sticks", r.tangle_sticks},
    };
    if (r.bigon_lower_bound) j["bigon_lower_bound"] = *r.bigon_lower_bound;
    if (r.obstruction) j["obstruction"] = *r.obstruction;
    return j.dump(2) + "\n";
}

std::string to_obj(const PolyLink& link) {
    std::string out;
    for (const auto& c : link.components)
        for (const auto& p : c.vertices) out += "v " + num(p.x) + " " + num(p.y) + " " + num(p.z) + "\n";
    std::size_t base = 1;
    for (const auto& c : link.components) {
        out += "l";
        for (std::size_t i = 0; i < c.vertices.size(); ++i) out += " " + std::to_string(base + i);
        if (c.closed && !c.vertices.empty()) out += " " + std::to_string(base);
        out += "\n";
        base += c.vertices.size();
    }
    return out;
}

std::string to_csv(const PolyLink& link) {
    std::string out = "component,vertex,x,y,z\n";
    for (std::size_t k = 0; k < link.components.size(); ++k) {
        const auto& vs = link.components[k].vertices;
        for (std::size_t i = 0; i < vs.size(); ++i)
            out += std::to_string(k) + "," + std::to_string(i) + "," + num(vs[i].x) + "," + num(vs[i].y) + "," +
                   num(vs[i].z) + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace supercoil
