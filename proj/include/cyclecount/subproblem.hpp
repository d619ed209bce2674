#pragma once

#include "cyclecount/plane_graph.hpp"

#include <vector>

namespace cyclecount {

// Per-edge data carried through the recursion. weight is the number of
// original edges an edge stands for (all zero when only totals are wanted);
// must and forbid are the required and excluded edge sets.
struct EdgeAttrs {
    std::vector<int> weight;
    std::vector<char> must;
    std::vector<char> forbid;

    static EdgeAttrs plain(int num_edges, int weight_each) {
        return {std::vector<int>(num_edges, weight_each), std::vector<char>(num_edges, 0),
                std::vector<char>(num_edges, 0)};
    }
};

// Count the cycles of h that conform to s, contain every must edge and no
// forbid edge.
struct Subproblem {
    CubicPlanarGraph h;
    EdgeAttrs attrs;
    ArcSequence s;
};

}  // namespace cyclecount
