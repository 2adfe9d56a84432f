#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercoil {

// Absolute tolerance for every geometric predicate. Geometry built by this
// library is normalized so sticks have length O(1) relative to it.
inline constexpr double kGeomTol = 1e-9;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Point3& operator+=(const Point3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Point3& operator-=(const Point3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Point3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    friend constexpr Point3 operator+(Point3 a, const Point3& b) { return a += b; }
    friend constexpr Point3 operator-(Point3 a, const Point3& b) { return a -= b; }
    friend constexpr Point3 operator*(Point3 a, double s) { return a *= s; }
    friend constexpr Point3 operator*(double s, Point3 a) { return a *= s; }
    friend constexpr Point3 operator-(const Point3& a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(const Point3&, const Point3&) = default;

    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }
Point3 normalized(const Point3& a);

struct Segment {
    Point3 a;
    Point3 b;
    double length() const { return distance(a, b); }
};

// Euclidean distance from p to the closed segment s.
double point_segment_distance(const Point3& p, const Segment& s);

enum class SegmentRelation { disjoint, shared_endpoint, crossing, degenerate };

struct SegmentIntersection {
    SegmentRelation relation = SegmentRelation::disjoint;
    // Meaningful for shared_endpoint and crossing.
    Point3 point{};
};

/// Classifies how two closed segments in space meet, under kGeomTol.
/// `shared_endpoint` means the segments touch only at a common endpoint;
/// segments that share an endpoint but also overlap further are `crossing`.
SegmentIntersection segment_intersect_3d(const Segment& a, const Segment& b);

/// An ordered list of vertices joined by sticks. When `closed`, the last
/// vertex joins the first by an implicit stick.
struct Chain {
    std::vector<Point3> vertices;
    bool closed = true;

    std::size_t stick_count() const;
    Segment stick(std::size_t i) const;
};

struct PolyLink {
    std::vector<Chain> components;

    std::size_t stick_count() const;
};

// Identifies one stick of a PolyLink.
struct EdgeRef {
    std::size_t component = 0;
    std::size_t index = 0;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct EmbeddingReport {
    bool embedded = true;
    std::optional<std::pair<EdgeRef, EdgeRef>> violation;
    std::string message;

    explicit operator bool() const { return embedded; }
};

/// True iff no two non-adjacent sticks meet and adjacent sticks meet only at
/// their shared vertex. Zero-length sticks and components with fewer than
/// three vertices are reported as violations.
EmbeddingReport check_embedded(const PolyLink& link);

class ProjectionDir {
public:
    ProjectionDir() = default;
    /// Normalizes `v`; throws GeometryError for a zero or non-finite vector.
    explicit ProjectionDir(const Point3& v);

    const Point3& unit() const { return unit_; }
    // Orthonormal image-plane basis (e1, e2) with e1 x e2 = unit().
    std::pair<Point3, Point3> image_basis() const;

    static ProjectionDir z() { return ProjectionDir({0.0, 0.0, 1.0}); }

private:
    Point3 unit_{0.0, 0.0, 1.0};
};

struct GenericityReport {
    bool generic = true;
    std::string reason;

    explicit operator bool() const { return generic; }
};

/// Checks that projecting `link` along `dir` gives a regular diagram: no
/// stick projects to a point, no two projected vertices coincide, no vertex
/// lies on a non-incident projected stick, projected sticks never overlap,
/// crossings are transverse double points with distinct depths, and no three
/// sticks pass through a common point.
GenericityReport genericity_certificate(const PolyLink& link, const ProjectionDir& dir);

struct SpiralSearch {
    double step = 1e-3;          // angular increment per trial, radians
    std::size_t budget = 10000;  // number of perturbed directions tried
};

/// Returns `preferred` when it is generic for `link`, otherwise the first
/// generic direction on a deterministic spiral about it.
ProjectionDir find_generic_projection(const PolyLink& link, const ProjectionDir& preferred,
                                      const SpiralSearch& search = {});

// Rigid motions used by the builders and by invariance tests.
struct Rigid {
    std::array<double, 9> rotation{1, 0, 0, 0, 1, 0, 0, 0, 1};  // row-major
    Point3 translation{};
    double scale = 1.0;

    Point3 apply(const Point3& p) const;
    Point3 apply_vector(const Point3& v) const;

    static Rigid axis_angle(const Point3& axis, double angle);
};

PolyLink transformed(const PolyLink& link, const Rigid& motion);

}  // namespace supercoil
