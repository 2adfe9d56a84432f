#include "supercoil/geom.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "supercoil/projection.hpp"

namespace supercoil {

Point3 normalized(const Point3& a) {
    const double n = norm(a);
    if (!(n > 0.0) || !std::isfinite(n)) throw GeometryError("cannot normalize a zero or non-finite vector");
    return a * (1.0 / n);
}

double point_segment_distance(const Point3& p, const Segment& s) {
    const Point3 d = s.b - s.a;
    const double len2 = dot(d, d);
    double t = len2 > 0.0 ? dot(p - s.a, d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, s.a + t * d);
}

namespace {

// Closest points between two non-degenerate segments (Ericson, RTCD 5.1.9).
std::pair<Point3, Point3> closest_points(const Segment& s1, const Segment& s2) {
    const Point3 d1 = s1.b - s1.a;
    const Point3 d2 = s2.b - s2.a;
    const Point3 r = s1.a - s2.a;
    const double a = dot(d1, d1);
    const double e = dot(d2, d2);
    const double f = dot(d2, r);
    const double c = dot(d1, r);
    const double b = dot(d1, d2);
    const double denom = a * e - b * b;

    double s = 0.0;
    if (denom > 1e-14 * a * e) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
    double t = (b * s + f) / e;
    if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
    }
    return {s1.a + s * d1, s2.a + t * d2};
}

}  // namespace

SegmentIntersection segment_intersect_3d(const Segment& a, const Segment& b) {
    if (!a.a.finite() || !a.b.finite() || !b.a.finite() || !b.b.finite())
        throw GeometryError("segment endpoints must be finite");
    if (a.length() < kGeomTol || b.length() < kGeomTol) return {SegmentRelation::degenerate, {}};

    std::optional<Point3> shared;
    Point3 far_a{}, far_b{};
    int shared_count = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Point3& pa = i == 0 ? a.a : a.b;
            const Point3& pb = j == 0 ? b.a : b.b;
            if (distance(pa, pb) < kGeomTol) {
                ++shared_count;
                shared = pa;
                far_a = i == 0 ? a.b : a.a;
                far_b = j == 0 ? b.b : b.a;
            }
        }
    }

    const auto [pa, pb] = closest_points(a, b);
    if (distance(pa, pb) > kGeomTol) return {SegmentRelation::disjoint, {}};

    if (shared) {
        const bool overlap = shared_count > 1 || point_segment_distance(far_a, b) < kGeomTol ||
                             point_segment_distance(far_b, a) < kGeomTol;
        return {overlap ? SegmentRelation::crossing : SegmentRelation::shared_endpoint, *shared};
    }
    return {SegmentRelation::crossing, 0.5 * (pa + pb)};
}

std::size_t Chain::stick_count() const {
    if (vertices.size() < 2) return 0;
    return closed ? vertices.size() : vertices.size() - 1;
}

Segment Chain::stick(std::size_t i) const {
    return {vertices[i], vertices[(i + 1) % vertices.size()]};
}

std::size_t PolyLink::stick_count() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.stick_count();
    return n;
}

namespace {

std::string edge_name(const EdgeRef& e) {
    std::ostringstream os;
    os << "component " << e.component << " stick " << e.index;
    return os.str();
}

bool adjacent(const PolyLink& link, const EdgeRef& e, const EdgeRef& f) {
    if (e.component != f.component) return false;
    const Chain& c = link.components[e.component];
    const std::size_t n = c.stick_count();
    if (e.index + 1 == f.index || f.index + 1 == e.index) return true;
    return c.closed && n > 2 && ((e.index == 0 && f.index == n - 1) || (f.index == 0 && e.index == n - 1));
}

}  // namespace

EmbeddingReport check_embedded(const PolyLink& link) {
    std::vector<EdgeRef> edges;
    for (std::size_t ci = 0; ci < link.components.size(); ++ci) {
        const Chain& c = link.components[ci];
        if (c.closed && c.vertices.size() < 3) {
            EmbeddingReport r{false, std::nullopt, "component " + std::to_string(ci) + " has fewer than 3 vertices"};
            return r;
        }
        for (std::size_t i = 0; i < c.stick_count(); ++i) edges.push_back({ci, i});
    }

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Segment si = link.components[edges[i].component].stick(edges[i].index);
        if (si.length() < kGeomTol)
            return {false, std::make_pair(edges[i], edges[i]), edge_name(edges[i]) + " has zero length"};
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Segment sj = link.components[edges[j].component].stick(edges[j].index);
            const auto rel = segment_intersect_3d(si, sj).relation;
            const bool adj = adjacent(link, edges[i], edges[j]);
            const bool ok = adj ? rel == SegmentRelation::shared_endpoint : rel == SegmentRelation::disjoint;
            if (!ok) {
                return {false, std::make_pair(edges[i], edges[j]),
                        edge_name(edges[i]) + " meets " + edge_name(edges[j])};
            }
        }
    }
    return {};
}

ProjectionDir::ProjectionDir(const Point3& v) {
    if (!v.finite()) throw GeometryError("projection direction must be finite");
    unit_ = normalized(v);
}

std::pair<Point3, Point3> ProjectionDir::image_basis() const {
    // Pick the world axis least aligned with the direction as a seed.
    const Point3& d = unit_;
    Point3 seed{1.0, 0.0, 0.0};
    if (std::abs(d.x) > std::abs(d.y) && std::abs(d.x) > std::abs(d.z)) seed = {0.0, 1.0, 0.0};
    // For directions near +z keep the conventional x/y picture.
    if (std::abs(d.z) >= std::abs(d.x) && std::abs(d.z) >= std::abs(d.y)) seed = {1.0, 0.0, 0.0};
    Point3 e1 = normalized(seed - dot(seed, d) * d);
    Point3 e2 = cross(d, e1);
    return {e1, e2};
}

GenericityReport genericity_certificate(const PolyLink& link, const ProjectionDir& dir) {
    const Projection proj(link, dir);
    return proj.certificate();
}

ProjectionDir find_generic_projection(const PolyLink& link, const ProjectionDir& preferred,
                                      const SpiralSearch& search) {
    if (genericity_certificate(link, preferred)) return preferred;
    const auto [e1, e2] = preferred.image_basis();
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 1; k <= search.budget; ++k) {
        const double theta = static_cast<double>(k) * search.step;
        const double phi = static_cast<double>(k) * golden;
        const Point3 lateral = std::cos(phi) * e1 + std::sin(phi) * e2;
        const ProjectionDir candidate(std::cos(theta) * preferred.unit() + std::sin(theta) * lateral);
        if (genericity_certificate(link, candidate)) return candidate;
    }
    throw GeometryError("no generic projection found within the search budget");
}

Point3 Rigid::apply_vector(const Point3& v) const {
    const auto& m = rotation;
    return Point3{m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
                  m[6] * v.x + m[7] * v.y + m[8] * v.z} *
           scale;
}

Point3 Rigid::apply(const Point3& p) const { return apply_vector(p) + translation; }

Rigid Rigid::axis_angle(const Point3& axis, double angle) {
    const Point3 k = normalized(axis);
    const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    Rigid r;
    r.rotation = {t * k.x * k.x + c,       t * k.x * k.y - s * k.z, t * k.x * k.z + s * k.y,
                  t * k.x * k.y + s * k.z, t * k.y * k.y + c,       t * k.y * k.z - s * k.x,
                  t * k.x * k.z - s * k.y, t * k.y * k.z + s * k.x, t * k.z * k.z + c};
    return r;
}

PolyLink transformed(const PolyLink& link, const Rigid& motion) {
    PolyLink out = link;
    for (auto& c : out.components)
        for (auto& v : c.vertices) v = motion.apply(v);
    return out;
}

}  // namespace supercoil
