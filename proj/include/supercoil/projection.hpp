#pragma once

#include <vector>

#include "supercoil/geom.hpp"

namespace supercoil {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline double cross2(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

// A transverse double point of a projected PolyLink.
struct ProjectedCrossing {
    EdgeRef first;   // first.component/index <= second in enumeration order
    EdgeRef second;
    double t_first = 0.0;   // parameter along `first`, in (0, 1)
    double t_second = 0.0;
    double depth_first = 0.0;  // height along the projection direction
    double depth_second = 0.0;
    Point2 where{};
};

/// A PolyLink flattened onto the image plane of a ProjectionDir.
class Projection {
public:
    Projection(const PolyLink& link, const ProjectionDir& dir);

    const PolyLink& link() const { return *link_; }
    const ProjectionDir& direction() const { return dir_; }

    Point2 image(std::size_t component, std::size_t vertex) const { return image_[component][vertex]; }
    double depth(std::size_t component, std::size_t vertex) const { return depth_[component][vertex]; }

    /// All transverse crossings between sticks that share no vertex.
    std::vector<ProjectedCrossing> crossings() const;

    GenericityReport certificate() const;

private:
    const PolyLink* link_;
    ProjectionDir dir_;
    std::vector<std::vector<Point2>> image_;
    std::vector<std::vector<double>> depth_;
};

}  // namespace supercoil
