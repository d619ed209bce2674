#pragma once

#include "cyclecount/boundary.hpp"
#include "cyclecount/poly.hpp"
#include "cyclecount/separator.hpp"
#include "cyclecount/subproblem.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

namespace cyclecount {

// A disc of H being closed up. Interior vertices keep their H index; the
// dangling end of boundary slot i is vertex num_interior_ids() + i. Edges
// start with their H index; merged edges get fresh indices. Each slot keeps
// its position-independent id, so labels stay attached while slots leave the
// boundary.
//
// The disc counts path systems P (its own labelling `self`) that close into
// a single cycle with the pairing `other` of the far side. Each contraction
// keeps that count, up to the running `correction`, and shrinks the disc
// until the far side is gone.
class DiscState {
public:
    struct Edge {
        int u = -1;
        int v = -1;
        int weight = 0;
        bool must = false;
        bool forbid = false;
        bool alive = false;
    };

    enum class Op { SingleEdge, ParallelEdge, EdgePair, DegreeTwoApex };
    struct Step {
        Op op;
        int slot = -1;
        int slot2 = -1;  // EdgePair and DegreeTwoApex only
    };

    // s must hold an arc for every labelled slot (the arcs of T), with far
    // ends replaced by dangling vertices; the contractions read the
    // direction of travel off those arcs.
    static DiscState from_disc(const CubicPlanarGraph& h, const DiscGraph& d, const Labelling& self,
                               const Labelling& other, const ArcSequence& s, const EdgeAttrs& attrs);

    int num_interior_ids() const { return static_cast<int>(rot_.size()); }
    bool is_dangling(int v) const { return v >= num_interior_ids(); }
    int dangling_of(int slot) const { return num_interior_ids() + slot; }
    int interior_count() const;
    const std::vector<int>& boundary() const { return boundary_; }
    int slot_edge(int slot) const { return slot_edge_[slot]; }
    int inner_end(int slot) const;
    int self_partner(int slot) const { return self_[slot]; }
    int other_partner(int slot) const { return other_[slot]; }
    bool labels_zero() const;
    const std::vector<Edge>& edges() const { return edges_; }
    const std::array<int, 3>& rotation(int v) const { return rot_[v]; }
    bool vertex_alive(int v) const { return alive_[v]; }
    const ArcSequence& s() const { return s_; }
    const LengthPoly& correction() const { return correction_; }

    // Next contraction in the fixed order: 0-labelled slots first (smallest
    // edge id; parallel-edge if its triangle sits on a bigon), then the
    // adjacent paired slots with the smallest edge id. Requires a nonempty
    // boundary.
    Step next_step() const;

    // Each contraction returns a value when it ends the process: the full
    // count of the current state (not including the correction). Otherwise
    // the state advances.
    std::optional<LengthPoly> single_edge_contract(int slot);
    std::optional<LengthPoly> parallel_edge_contract(int slot);
    std::optional<LengthPoly> edge_pair_contract(int slot, int slot2);
    std::optional<LengthPoly> degree_two_apex(int slot, int slot2) const;
    std::optional<LengthPoly> apply(const Step& st);

    // The closed-up graph once the boundary is empty.
    Subproblem to_subproblem() const;

private:
    int find_arc(int edge) const;
    int new_edge(int u, int v, int weight, bool must, bool forbid);
    void replace_in_rotation(int v, int from, int to);
    void remove_slot(int slot);
    bool must_outside(std::initializer_list<int> allowed) const;
    int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

    std::vector<std::array<int, 3>> rot_;
    std::vector<char> alive_;
    std::vector<Edge> edges_;
    std::vector<int> slot_edge_;
    std::vector<int> self_;
    std::vector<int> other_;
    std::vector<int> boundary_;
    ArcSequence s_;
    LengthPoly correction_;
};

// Brute-force count for the current state: path systems P with labelling
// `self` such that P plus the far-side pairing is one cycle conforming to S,
// honouring must/forbid, by total weight.
LengthPoly psaw_count(const DiscState& d);

struct StitchReduced {
    Subproblem sub;
    LengthPoly correction;
};
using StitchResult = std::variant<LengthPoly, StitchReduced>;

// Contracts the disc until the far side is closed up. Small discs (two or
// fewer interior vertices) are finished by psaw_count.
StitchResult stitch_disc(const CubicPlanarGraph& h, const DiscGraph& d, const Labelling& self,
                         const Labelling& other, const ArcSequence& s, const EdgeAttrs& attrs,
                         std::ostream* trace = nullptr);

const char* op_name(DiscState::Op op);

}  // namespace cyclecount
