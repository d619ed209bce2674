#pragma once

#include "cyclecount/plane_graph.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cyclecount {

CubicPlanarGraph theta_graph();
CubicPlanarGraph k4_graph();
// Prism over an n-gon: n = 3 triangular prism, n = 4 cube, n = 5 pentagonal prism.
CubicPlanarGraph prism_graph(int n);
CubicPlanarGraph dodecahedron_graph();
// Two subdivided K4 halves joined by a bridge.
CubicPlanarGraph dumbbell_graph();

// Rotation system of a straight-line drawing: each vertex lists its edges by
// increasing angle. No parallel edges. Runs validation, so a drawing of a
// non-planar graph throws GraphError("euler").
CubicPlanarGraph graph_from_drawing(const std::vector<std::pair<double, double>>& points,
                                    const std::vector<std::pair<int, int>>& edges);

// Text-format Petersen graph with the rotation read off its usual drawing.
std::string petersen_text();

// Random cubic plane multigraph on n vertices (n even, n >= 4), grown from
// K4 by repeatedly joining two points on the boundary of a random face.
// allow_bigons = false never subdivides the same edge twice in one step.
CubicPlanarGraph random_cubic_planar(int n, std::mt19937_64& rng, bool allow_bigons = true);

}  // namespace cyclecount
