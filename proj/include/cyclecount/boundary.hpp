#pragma once

#include "cyclecount/plane_graph.hpp"

#include <cstdint>
#include <vector>

namespace cyclecount {

// Symmetric, fixed-point-free, non-crossing partial pairing of the boundary
// edges of a separator, indexed by cyclic boundary position. partner[i] is
// the paired position or -1 for label 0.
struct Labelling {
    std::vector<int> partner;

    int size() const { return static_cast<int>(partner.size()); }
    bool is_zero() const;
    std::uint64_t support_mask() const;
    auto operator<=>(const Labelling&) const = default;
};

// All labellings on m positions in a fixed order; their number is the m-th
// Motzkin number.
std::vector<Labelling> enumerate_labellings(int m);

// Whether a given partner vector is symmetric, fixed-point free and
// non-crossing.
bool is_valid_labelling(const Labelling& l);

// Whether the two pairings close up into a single cycle through their
// common support. Both-zero counts as compatible.
bool compatibility_check(const Labelling& l1, const Labelling& l2);

// A separator edge by boundary position: the H edge and its endpoints in the
// first and second disc.
struct BoundaryEdge {
    int edge = -1;
    int end1 = -1;
    int end2 = -1;
};

// Arc sequence walked by any cycle with these labellings: enter the first
// disc, leave it where l1 says, re-enter where l2 says. Returned in canonical
// form. Empty for the zero pair.
ArcSequence build_T(const Labelling& l1, const Labelling& l2, const std::vector<BoundaryEdge>& boundary);

// Equivalence of cyclic arc sequences under rotation and full reversal
// (reversing the order and flipping every arc).
ArcSequence reversed(const ArcSequence& s);
ArcSequence canonical_form(const ArcSequence& s);
bool equivalent(const ArcSequence& a, const ArcSequence& b);

// Does the cyclic traversal meet the arcs of S, in order and orientation,
// for one of its two directions? Traversal entries are darts of the cycle
// in order; arcs with edge -1 are pseudo edges that S never names.
bool conforms(const std::vector<Arc>& traversal, const ArcSequence& s);
bool conforms(const CubicPlanarGraph& h, const std::vector<int>& cycle_edges, const ArcSequence& s);

// Which disc each vertex lies in (0 or 1) and which edges cross the separator.
struct DiscSides {
    std::vector<int> vertex_side;
    std::vector<char> separator_edge;
};

// One representative per equivalence class of merged sequences of S and T.
// The representative contains S verbatim starting at its first arc. origin
// marks each entry: 1 from S, 2 from T, 3 shared edge. With valid_only set,
// merges that cannot pass is_valid_interleaving are cut off while they are
// built, and only valid ones are returned.
struct Interleaving {
    ArcSequence arcs;
    std::vector<std::uint8_t> origin;
};
std::vector<Interleaving> enumerate_interleavings(const ArcSequence& s, const ArcSequence& t,
                                                  const DiscSides* valid_only = nullptr);

// S restricted to separator edges must match an ordered subset of T, and
// between two consecutive T arcs every S-only arc must lie in the disc that
// the first of them enters.
bool is_valid_interleaving(const Interleaving& in, const ArcSequence& s, const ArcSequence& t, const DiscSides& sides);

}  // namespace cyclecount
