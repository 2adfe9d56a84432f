#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "supercoil/conway.hpp"
#include "supercoil/diagram.hpp"
#include "supercoil/geom.hpp"
#include "supercoil/projection.hpp"
#include "supercoil/tangle.hpp"

namespace supercoil {

class LinkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A frame stick chain between two tangle vertices (0-based), through the
// listed bends.
struct FrameEdge {
    int from = 0;
    int to = 0;
    std::vector<Point2> bends;
};

// One end of a frame edge at a tangle vertex.
struct FramePort {
    int edge = 0;
    int end = 0;  // 0 at `from`, 1 at `to`
    Point2 dir{};
};

// The standard diagram with each twist region shrunk to a 4-valent vertex.
// Vertex k has back ports toward k-2, k-1 and forward ports toward k+1,
// k+2 along the ladder of the standard form; the closure bends stand in for
// the missing neighbours at either end.
struct FrameGraph {
    int n = 0;
    std::vector<Point2> vertices;
    std::vector<int> signs;  // handedness of the tangle at each vertex
    std::vector<FrameEdge> edges;
    std::vector<std::array<FramePort, 2>> back;
    std::vector<std::array<FramePort, 2>> forward;

    std::size_t stick_count() const;
    TanglePorts ports(int k) const;
};

/// Planar frame with 2n+3 sticks. Odd-numbered vertices carry negative
/// tangles and sit on the left arc, even ones positive on the right; a
/// mirrored spec flips every sign. Throws LinkError if the layout fails its
/// planarity or port-order checks.
FrameGraph build_frame(const ConwaySpec& spec);

struct LinkOptions {
    TanglePlacement placement;
    double ball_fraction = 0.1;  // tangle radius over its vertex's clearance
    bool verify = true;          // embedding and determinant checks
};

/// Builds each tangle with the frame's port directions and splices it in.
PolyLink insert_tangles(const FrameGraph& frame, const ConwaySpec& spec, const LinkOptions& options = {});

PolyLink build_link(const ConwaySpec& spec, const LinkOptions& options = {});

int component_count(const PolyLink& link);

/// Continued-fraction numerator of `spec` modulo `prime`.
unsigned long long numerator_mod(const ConwaySpec& spec, unsigned long long prime);

/// 2 when the numerator is even, else 1.
int expected_components(const ConwaySpec& spec);

/// |det d| equals the continued-fraction numerator (checked modulo two
/// 62-bit primes, so no overflow).
bool determinant_matches(const Diagram& d, const ConwaySpec& spec);

/// First direction of a Fibonacci sphere sample whose generic projection
/// is alternating with exactly `crossings` crossings. The construction's
/// own z projection carries two extra crossings per core self-crossing.
std::optional<ProjectionDir> find_minimal_projection(const PolyLink& link, int crossings,
                                                     std::size_t samples = 4000);

}  // namespace supercoil
