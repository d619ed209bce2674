#pragma once

#include "cyclecount/engine.hpp"
#include "cyclecount/plane_graph.hpp"

#include <cstdint>
#include <vector>

namespace cyclecount {

// Cycles containing every edge of `must` and none of `forbid` (dense edge
// indices). The empty cycle is counted only when include_empty is set and
// `must` is empty. Throws GraphError("constraint") if the sets overlap or
// name unknown edges.
CountResult count_constrained(const CubicPlanarGraph& h, const std::vector<int>& must,
                              const std::vector<int>& forbid, bool include_empty = false,
                              const EngineOptions& opts = {});

// Cycles by number of edges; entry 0 is the empty cycle when include_empty.
CountResult count_by_length(const CubicPlanarGraph& h, bool include_empty = false, const EngineOptions& opts = {});
// Cycles with exactly l edges; l = 0 gives 1 for the empty cycle.
BigInt count_length(const CubicPlanarGraph& h, int l, const EngineOptions& opts = {});

// Partitions of the sphere's faces into two connected parts, one per
// nonempty cycle.
BigInt count_partitions_sphere(const CubicPlanarGraph& h, const EngineOptions& opts = {});

// Border cycle of a bordered instance: vertices in clockwise order and the
// edges joining consecutive ones (edges[i] joins vertices[i] and
// vertices[i+1], wrapping around).
struct BorderSpec {
    std::vector<int> vertices;
    std::vector<int> edges;
};
// Builds a border from a vertex list, choosing the smallest-id edge between
// consecutive vertices. Throws GraphError("constraint") if it is not a simple
// cycle of h.
BorderSpec border_from_vertices(const CubicPlanarGraph& h, const std::vector<int>& vertices);

// Sum over unordered pairs {a, b} of border vertices (a before b in border
// order) of the cycles that run along the border from a to b and touch no
// other border vertex.
BigInt count_partitions_bordered(const CubicPlanarGraph& h, const BorderSpec& b, const EngineOptions& opts = {});

// k independent uniform samples from the nonempty cycles, each a sorted list
// of dense edge indices. Edges are decided in ascending external id order.
std::vector<std::vector<int>> sample_cycles(const CubicPlanarGraph& h, int k, std::uint64_t seed,
                                            const EngineOptions& opts = {});

}  // namespace cyclecount
