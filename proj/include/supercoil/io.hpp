#pragma once

#include <stdexcept>
#include <string>

#include "supercoil/bounds.hpp"
#include "supercoil/diagram.hpp"
#include "supercoil/geom.hpp"
#include "supercoil/tangle.hpp"

namespace supercoil {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"components": [[[x,y,z],...],...]}, no repeated closing vertex, doubles
// printed round-trip exact.
std::string geometry_json(const PolyLink& link);
/// Reads geometry JSON; every component comes back closed. Throws IoError.
PolyLink parse_geometry_json(const std::string& text);

// Strands, endpoints (NW/NE/SW/SE), core and stick count of one tangle.
std::string tangle_json(const TangleGeometry& t);

// {"pd": [[a,b,c,d],...], "signs": [...], "free_loops": k}
std::string diagram_json(const Diagram& d);
Diagram parse_diagram_json(const std::string& text);

// BoundsReport with null bigon/obstruction fields when some entry is 1.
std::string bounds_json(const BoundsReport& r);

// Wavefront OBJ: one `v` per vertex, one `l` polyline per chain (closed
// chains repeat their first index). 12 significant digits.
std::string to_obj(const PolyLink& link);
// component,vertex,x,y,z rows under a header, 12 significant digits.
std::string to_csv(const PolyLink& link);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace supercoil
