#pragma once

#include "cyclecount/boundary.hpp"
#include "cyclecount/plane_graph.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace cyclecount {

// Simple cycle in the dual triangulation of H. G vertices are H faces and
// G edges are H edges, so the cycle is given as H face indices and the H
// edges joining consecutive faces (edges[i] joins vertices[i] and
// vertices[i+1], wrapping around). A length-1 cycle is a G loop (an H
// bridge); a length-2 cycle is a bigon.
struct SeparatorCycle {
    std::vector<int> vertices;
    std::vector<int> edges;
    // G vertices strictly inside the first and the second disc.
    std::vector<int> side_b;
    std::vector<int> side_c;
    // Disc (0 or 1) of every H vertex, i.e. of every G triangle.
    std::vector<int> vertex_region;

    int length() const { return static_cast<int>(edges.size()); }
    int balance() const { return static_cast<int>(std::max(side_b.size(), side_c.size())); }
};

// Completes a cycle given by its faces and edges: computes both sides.
// Throws std::invalid_argument if the edges do not form a simple cycle of G.
SeparatorCycle separator_from_cycle(const CubicPlanarGraph& h, std::vector<int> vertices, std::vector<int> edges);

// Fundamental cycle of a BFS tree of G with both sides holding at most 2n/3
// of the n G vertices. Among all roots and non-tree edges the shortest such
// cycle wins; ties go to the smaller larger side, then to the
// lexicographically smallest vertex list after rotating to its least vertex
// and picking the smaller direction. Throws
// std::runtime_error if no balanced fundamental cycle exists.
SeparatorCycle find_cycle_separator(const CubicPlanarGraph& h);

// One side of a separator seen from H: the H vertices of a disc, the H
// edges with both ends inside, and the separator edges in cycle order. The
// outer end of boundary position i is replaced by its own dangling vertex
// dangling_base + i.
struct DiscGraph {
    int which = 0;
    int dangling_base = 0;
    std::vector<int> interior;
    std::vector<int> interior_edges;
    std::vector<BoundaryEdge> boundary;

    int dangling(int pos) const { return dangling_base + pos; }
    int inner_end(int pos) const { return which == 0 ? boundary[pos].end1 : boundary[pos].end2; }
    int outer_end(int pos) const { return which == 0 ? boundary[pos].end2 : boundary[pos].end1; }
};

std::pair<DiscGraph, DiscGraph> split_discs(const CubicPlanarGraph& h, const SeparatorCycle& a);
std::vector<BoundaryEdge> boundary_edges(const CubicPlanarGraph& h, const SeparatorCycle& a);
DiscSides disc_sides(const CubicPlanarGraph& h, const SeparatorCycle& a);

// Labelling induced by a path system P (H edge indices inside the disc):
// boundary positions joined by a path of P are paired. Returns nothing if P
// is neither a set of boundary-to-boundary paths nor a single closed cycle.
std::optional<Labelling> trace_labelling(const CubicPlanarGraph& h, const DiscGraph& d, const std::vector<int>& p);

}  // namespace cyclecount
