#include "supercoil/projection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace supercoil {

namespace {

double dist2(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double point_segment_distance2(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

struct EdgeView {
    EdgeRef ref;
    std::size_t v0;
    std::size_t v1;
};

std::vector<EdgeView> edge_views(const PolyLink& link) {
    std::vector<EdgeView> out;
    for (std::size_t ci = 0; ci < link.components.size(); ++ci) {
        const Chain& c = link.components[ci];
        const std::size_t n = c.vertices.size();
        for (std::size_t i = 0; i < c.stick_count(); ++i) out.push_back({{ci, i}, i, (i + 1) % n});
    }
    return out;
}

bool share_vertex(const EdgeView& e, const EdgeView& f) {
    if (e.ref.component != f.ref.component) return false;
    return e.v0 == f.v0 || e.v0 == f.v1 || e.v1 == f.v0 || e.v1 == f.v1;
}

std::string describe(const EdgeRef& e) {
    std::ostringstream os;
    os << "(" << e.component << "," << e.index << ")";
    return os.str();
}

}  // namespace

Projection::Projection(const PolyLink& link, const ProjectionDir& dir) : link_(&link), dir_(dir) {
    const auto [e1, e2] = dir.image_basis();
    image_.resize(link.components.size());
    depth_.resize(link.components.size());
    for (std::size_t ci = 0; ci < link.components.size(); ++ci) {
        for (const Point3& p : link.components[ci].vertices) {
            image_[ci].push_back({dot(p, e1), dot(p, e2)});
            depth_[ci].push_back(dot(p, dir.unit()));
        }
    }
}

std::vector<ProjectedCrossing> Projection::crossings() const {
    const auto edges = edge_views(*link_);
    std::vector<ProjectedCrossing> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const Point2 p = image_[e.ref.component][e.v0];
        const Point2 p1 = image_[e.ref.component][e.v1];
        const Point2 d1{p1.x - p.x, p1.y - p.y};
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& f = edges[j];
            if (share_vertex(e, f)) continue;
            const Point2 q = image_[f.ref.component][f.v0];
            const Point2 q1 = image_[f.ref.component][f.v1];
            const Point2 d2{q1.x - q.x, q1.y - q.y};
            const double denom = cross2(d1, d2);
            if (std::abs(denom) < 1e-300) continue;
            const Point2 qp{q.x - p.x, q.y - p.y};
            const double t = cross2(qp, d2) / denom;
            const double s = cross2(qp, d1) / denom;
            if (!(t > 0.0 && t < 1.0 && s > 0.0 && s < 1.0)) continue;
            ProjectedCrossing x;
            x.first = e.ref;
            x.second = f.ref;
            x.t_first = t;
            x.t_second = s;
            const auto& de = depth_[e.ref.component];
            const auto& df = depth_[f.ref.component];
            x.depth_first = de[e.v0] + t * (de[e.v1] - de[e.v0]);
            x.depth_second = df[f.v0] + s * (df[f.v1] - df[f.v0]);
            x.where = {p.x + t * d1.x, p.y + t * d1.y};
            out.push_back(x);
        }
    }
    return out;
}

GenericityReport Projection::certificate() const {
    const auto edges = edge_views(*link_);
    for (const auto& e : edges) {
        if (dist2(image_[e.ref.component][e.v0], image_[e.ref.component][e.v1]) <= kGeomTol)
            return {false, "stick " + describe(e.ref) + " projects to a point"};
    }

    std::vector<std::pair<std::size_t, std::size_t>> verts;
    for (std::size_t ci = 0; ci < image_.size(); ++ci)
        for (std::size_t vi = 0; vi < image_[ci].size(); ++vi) verts.emplace_back(ci, vi);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (dist2(image_[verts[i].first][verts[i].second], image_[verts[j].first][verts[j].second]) <= kGeomTol)
                return {false, "two vertices project to the same point"};
        }
    }

    for (const auto& [ci, vi] : verts) {
        const Point2 p = image_[ci][vi];
        for (const auto& e : edges) {
            if (e.ref.component == ci && (e.v0 == vi || e.v1 == vi)) continue;
            const Point2 a = image_[e.ref.component][e.v0];
            const Point2 b = image_[e.ref.component][e.v1];
            if (point_segment_distance2(p, a, b) <= kGeomTol)
                return {false, "a vertex projects onto stick " + describe(e.ref)};
        }
    }

    const auto xs = crossings();
    std::vector<std::vector<Point2>> along(edges.size());
    auto slot = [&](const EdgeRef& r) {
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k].ref == r) return k;
        return edges.size();
    };
    for (const auto& x : xs) {
        if (std::abs(x.depth_first - x.depth_second) <= kGeomTol)
            return {false, "sticks " + describe(x.first) + " and " + describe(x.second) + " cross at equal depth"};
        along[slot(x.first)].push_back(x.where);
        along[slot(x.second)].push_back(x.where);
    }
    for (const auto& pts : along) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (dist2(pts[i], pts[j]) <= kGeomTol) return {false, "three sticks meet at a projected point"};
    }
    return {};
}

}  // namespace supercoil
