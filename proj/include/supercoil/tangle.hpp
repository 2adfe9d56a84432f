#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "supercoil/geom.hpp"
#include "supercoil/projection.hpp"

namespace supercoil {

class TangleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The polygonal core v_1..v_{m+1}. The first and last edges are the free
// rays from v_1 along back_dir and from v_{m+1} along forward_dir.
struct CoreGeometry {
    std::vector<Point3> vertices;
    Point3 back_dir{-1.0, 0.0, 0.0};
    Point3 forward_dir{0.0, -1.0, 0.0};
    int m = 0;
    int writhe = 0;

    std::size_t edge_count() const { return vertices.size() + 1; }
    // The core as an open polyline, free edges cut at length `reach`.
    std::vector<Point3> polyline(double reach) const;
};

struct TanglePlacement {
    double epsilon = 0.0;  // 0 picks 0.05 x the core's minimum feature size
    double tilt = 0.1;
};

// Horizontal unit directions of the four free sticks, seen from the tangle.
// Both forward ports must lie strictly on one side of the back ports'
// bisector. Layouts far from the canonical one (forward ports pointing
// back past the bisector's normal, say) often have no placement and throw.
struct TanglePorts {
    std::array<Point2, 2> back;
    std::array<Point2, 2> forward;

    // 165 and 195 degrees behind, 240 and 300 degrees ahead.
    static TanglePorts canonical();
};

struct TangleEndpoints {
    Point3 nw, ne, sw, se;
};

struct TangleGeometry {
    Chain strand_a{{}, false};  // both strands run from a back port to a forward port
    Chain strand_b{{}, false};
    TangleEndpoints endpoints;
    int sign = -1;
    int c = 0;
    int stick_count = 0;
    CoreGeometry core;
    double epsilon = 0.0;
    // Which entry of ports.back / ports.forward each strand uses; strand b
    // takes the other one.
    int a_back_port = 0;
    int a_forward_port = 0;
    TanglePorts ports;

    PolyLink as_open_link() const { return PolyLink{{strand_a, strand_b}}; }
};

/// Core for m = floor(c/3) with canonical ports. Its projection along z
/// has m self-crossings, all of sign `sign`.
CoreGeometry build_core(int m, int sign);

/// The tilted-perpendicular points o_i (above) and u_i (below) at distance
/// epsilon from each core vertex. Throws TangleError when epsilon exceeds
/// half the core's minimum feature size.
std::pair<std::vector<Point3>, std::vector<Point3>> place_vertices(const CoreGeometry& core,
                                                                 const TanglePlacement& placement);

/// Supercoiled integral tangle with c crossings of sign `sign` using the
/// stick count of lemma1_sticks(c). Throws TangleError when no placement verifies.
TangleGeometry build_tangle(int c, int sign, const TanglePlacement& placement = {});

// Ports strand a must use (indices into TanglePorts), -1 for either.
struct StrandRoute {
    int back = -1;
    int forward = -1;
};

/// Same, with the free sticks leaving along `ports`.
TangleGeometry build_tangle(int c, int sign, const TanglePorts& ports, const TanglePlacement& placement = {},
                            const StrandRoute& route = {});

struct CrossingAudit {
    int twist_crossings = 0;
    int writhe_crossings = 0;
    int core_crossings = 0;
    int projected_crossings = 0;  // double points of the projection, c + 2m
};

/// Splits the tangle's crossing count into the half-twists at the core
/// vertices and the two effective crossings per core self-crossing. Throws
/// TangleError if the projection does not match that accounting.
CrossingAudit crossing_audit(const TangleGeometry& t);

/// Reflection through z = 0.
TangleGeometry mirrored(const TangleGeometry& t);

}  // namespace supercoil
