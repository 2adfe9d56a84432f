#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supercoil/bounds.hpp"
#include "supercoil/diagram.hpp"
#include "supercoil/geom.hpp"
#include "supercoil/io.hpp"
#include "supercoil/link.hpp"
#include "supercoil/tangle.hpp"

namespace py = pybind11;
using namespace supercoil;

namespace {

using Coords = std::vector<std::vector<std::array<double, 3>>>;

PolyLink to_link(const Coords& comps) {
    PolyLink link;
    for (const auto& c : comps) {
        Chain ch;
        for (const auto& p : c) ch.vertices.push_back({p[0], p[1], p[2]});
        link.components.push_back(std::move(ch));
    }
    return link;
}

Coords from_link(const PolyLink& link) {
    Coords out;
    for (const auto& c : link.components) {
        auto& comp = out.emplace_back();
        for (const auto& p : c.vertices) comp.push_back({p.x, p.y, p.z});
    }
    return out;
}

py::dict diagram_dict(const Diagram& d) {
    py::dict r;
    r["crossings"] = d.pd;
    r["signs"] = d.signs;
    r["free_loops"] = d.free_loops;
    return r;
}

Diagram to_diagram(const std::vector<std::array<int, 4>>& pd, const std::vector<int>& signs, int free_loops) {
    Diagram d{pd, signs, free_loops};
    validate(d);
    return d;
}

std::map<int, long long> poly_dict(const BracketPolynomial& p) { return p.terms(); }

std::array<double, 3> arr(const Point3& p) { return {p.x, p.y, p.z}; }

std::vector<std::array<double, 3>> arr(const Chain& c) {
    std::vector<std::array<double, 3>> out;
    for (const auto& p : c.vertices) out.push_back(arr(p));
    return out;
}

TanglePlacement placement(double epsilon, double tilt) {
    TanglePlacement p;
    p.epsilon = epsilon;
    p.tilt = tilt;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Supercoiled tangles and polygonal 2-bridge links";

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<DiagramError>(m, "DiagramError", PyExc_RuntimeError);

    m.def("check_embedded", [](const Coords& c) {
        const auto r = check_embedded(to_link(c));
        return py::make_tuple(r.embedded, r.message);
    });
    m.def(
        "find_generic_projection",
        [](const Coords& c, std::array<double, 3> preferred) {
            const auto d = find_generic_projection(to_link(c), ProjectionDir({preferred[0], preferred[1], preferred[2]}));
            return std::array<double, 3>{d.unit().x, d.unit().y, d.unit().z};
        },
        py::arg("components"), py::arg("preferred") = std::array<double, 3>{0, 0, 1});
    m.def(
        "extract_diagram",
        [](const Coords& c, std::array<double, 3> dir) {
            return diagram_dict(extract_diagram(to_link(c), ProjectionDir({dir[0], dir[1], dir[2]})));
        },
        py::arg("components"), py::arg("direction") = std::array<double, 3>{0, 0, 1});

    m.def("standard_diagram", [](const std::string& conway, bool mirror) {
        return diagram_dict(standard_diagram(ConwaySpec::parse(conway, mirror)));
    }, py::arg("conway"), py::arg("mirror") = false);
    m.def("kauffman_bracket", [](const std::vector<std::array<int, 4>>& pd, const std::vector<int>& signs,
                                 int free_loops) { return poly_dict(kauffman_bracket(to_diagram(pd, signs, free_loops))); },
          py::arg("crossings"), py::arg("signs"), py::arg("free_loops") = 0);
    m.def("normalized_bracket", [](const std::vector<std::array<int, 4>>& pd, const std::vector<int>& signs,
                                   int free_loops) { return poly_dict(normalized_bracket(to_diagram(pd, signs, free_loops))); },
          py::arg("crossings"), py::arg("signs"), py::arg("free_loops") = 0);
    m.def("determinant", [](const std::vector<std::array<int, 4>>& pd, const std::vector<int>& signs,
                            int free_loops) { return determinant(to_diagram(pd, signs, free_loops)); },
          py::arg("crossings"), py::arg("signs"), py::arg("free_loops") = 0);
    m.def("is_alternating", [](const std::vector<std::array<int, 4>>& pd, const std::vector<int>& signs) {
        return is_alternating(to_diagram(pd, signs, 0));
    });
    m.def("count_bigons", [](const std::vector<std::array<int, 4>>& pd, const std::vector<int>& signs) {
        return count_bigons(to_diagram(pd, signs, 0));
    });
    m.def("min_bigons_over_flypes", [](const std::string& conway) {
        return min_bigons_over_flypes(ConwaySpec::parse(conway));
    });

    py::register_exception<TangleError>(m, "TangleError", PyExc_RuntimeError);
    py::register_exception<LinkError>(m, "LinkError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_ValueError);

    m.def(
        "build_tangle",
        [](int c, int sign, double epsilon, double tilt) {
            const TangleGeometry t = build_tangle(c, sign, placement(epsilon, tilt));
            const CrossingAudit a = crossing_audit(t);
            py::dict r;
            r["c"] = t.c;
            r["sign"] = t.sign;
            r["sticks"] = t.stick_count;
            r["epsilon"] = t.epsilon;
            r["strands"] = std::vector{arr(t.strand_a), arr(t.strand_b)};
            py::dict e;
            e["NW"] = arr(t.endpoints.nw);
            e["NE"] = arr(t.endpoints.ne);
            e["SW"] = arr(t.endpoints.sw);
            e["SE"] = arr(t.endpoints.se);
            r["endpoints"] = e;
            py::dict au;
            au["twist"] = a.twist_crossings;
            au["writhe"] = a.writhe_crossings;
            au["core"] = a.core_crossings;
            au["projected"] = a.projected_crossings;
            r["audit"] = au;
            return r;
        },
        py::arg("crossings"), py::arg("sign") = -1, py::arg("epsilon") = 0.0, py::arg("tilt") = 0.1);
    m.def(
        "build_link",
        [](const std::string& conway, bool mirror, double epsilon, double tilt) {
            LinkOptions opt;
            opt.placement = placement(epsilon, tilt);
            return from_link(build_link(ConwaySpec::parse(conway, mirror), opt));
        },
        py::arg("conway"), py::arg("mirror") = false, py::arg("epsilon") = 0.0, py::arg("tilt") = 0.1);
    m.def("component_count", [](const Coords& c) {
        PolyLink l = to_link(c);
        return component_count(l);
    });
    m.def("geometry_json", [](const Coords& c) { return geometry_json(to_link(c)); });
    m.def("to_obj", [](const Coords& c) { return to_obj(to_link(c)); });
    m.def("to_csv", [](const Coords& c) { return to_csv(to_link(c)); });
    m.def("bounds_report", [](const std::string& conway) {
        return bounds_json(bounds_report(ConwaySpec::parse(conway)));
    });

    m.def("lemma1_sticks", &lemma1_sticks);
    m.def("lemma4_bound", [](const std::string& conway) { return lemma4_bound(ConwaySpec::parse(conway)); });
    m.def("theorem5_obstruction",
          [](const std::string& conway) { return theorem5_obstruction(ConwaySpec::parse(conway)); });
    m.def("improvement_threshold",
          [](const std::string& conway) { return improvement_threshold(ConwaySpec::parse(conway)); });
    m.def("theorem2_bound", [](const std::string& conway) { return theorem2_bound(ConwaySpec::parse(conway)); });
    m.def("continued_fraction", [](const std::string& conway) {
        const auto f = continued_fraction(ConwaySpec::parse(conway));
        return py::make_tuple(f.p, f.q);
    });
}
