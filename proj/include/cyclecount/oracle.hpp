#pragma once

#include "cyclecount/plane_graph.hpp"
#include "cyclecount/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cyclecount {

// Reference enumeration by exhaustive search, used to check the engine.
// Edge sets are dense edge indices.
struct CycleFilter {
    std::vector<int> must;
    std::vector<int> forbid;
    std::optional<int> length;
    ArcSequence s;
    bool include_empty = false;
};

// Every simple cycle of h passing the filter, each as a sorted edge list.
// The empty cycle appears as an empty list when include_empty is set and the
// filter admits it.
std::vector<std::vector<int>> enumerate_cycles(const CubicPlanarGraph& h, const CycleFilter& f = {});

BigInt oracle_count(const CubicPlanarGraph& h, const CycleFilter& f = {});
// Counts by number of edges (the length filter is ignored).
std::map<int, BigInt> oracle_count_by_length(const CubicPlanarGraph& h, const CycleFilter& f = {});

}  // namespace cyclecount
