#pragma once

#include "cyclecount/plane_graph.hpp"

#include <string>

namespace cyclecount {

// Text form:
//   cubic-planar v1
//   vertices N
//   edge <id> <u> <v>
//   rot <v> <e1> <e2> <e3>      (counterclockwise)
// Blank lines and lines starting with '#' are ignored. A document whose
// first non-space character is '{' is read as the JSON form
//   {"vertices": N, "edges": [[id,u,v],...], "rotations": {"v": [e1,e2,e3]}}
// Text input numbers vertices in order of their rot lines, JSON input in
// increasing id order.
CubicPlanarGraph parse_graph(const std::string& text);
CubicPlanarGraph load_graph(const std::string& path);

std::string to_text(const CubicPlanarGraph& h);
std::string to_json(const CubicPlanarGraph& h);

}  // namespace cyclecount
