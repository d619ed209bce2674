#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace cyclecount;
using cyclecount::testing::random_disc_state;
using cyclecount::testing::state_value;

namespace {

// Value of a stitched disc once the reduced graph is counted directly.
LengthPoly stitched_value(const StitchResult& r) {
    if (const auto* v = std::get_if<LengthPoly>(&r)) return *v;
    const auto& red = std::get<StitchReduced>(r);
    return red.correction + brute_force_base(red.sub);
}

}  // namespace

TEST_CASE("each contraction keeps the count up to its correction") {
    std::mt19937_64 rng(1234);
    int steps = 0;
    for (int i = 0; i < 60; ++i) {
        DiscState st = random_disc_state(rng);
        const LengthPoly start = state_value(st);
        // Discs with two or fewer interior vertices are counted directly.
        while (!st.boundary().empty() && st.interior_count() > 2) {
            const LengthPoly before = state_value(st);
            auto step = st.next_step();
            auto done = st.apply(step);
            ++steps;
            if (done) {
                CHECK(st.correction() + *done == before);
                break;
            }
            CHECK(state_value(st) == before);
        }
        if (st.boundary().empty()) CHECK(state_value(st) == start);
    }
    CHECK(steps > 0);
}

TEST_CASE("stitch_disc agrees with direct enumeration") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        auto h = random_cubic_planar(10 + 2 * (i % 6), rng);
        auto sep = find_cycle_separator(h);
        auto [d1, d2] = split_discs(h, sep);
        auto bnd = boundary_edges(h, sep);
        auto labellings = enumerate_labellings(sep.length());
        auto attrs = EdgeAttrs::plain(h.num_edges(), 1);
        for (const auto& a : labellings)
            for (const auto& b : labellings) {
                if (!compatibility_check(a, b)) continue;
                const ArcSequence t = build_T(a, b, bnd);
                for (int side = 0; side < 2; ++side) {
                    const DiscGraph& d = side == 0 ? d1 : d2;
                    const Labelling& self = side == 0 ? a : b;
                    const Labelling& other = side == 0 ? b : a;
                    // The engine always hands a disc the arcs of T, with far
                    // ends replaced by dangling vertices.
                    ArcSequence s;
                    for (Arc arc : t) {
                        for (int pos = 0; pos < static_cast<int>(bnd.size()); ++pos)
                            if (bnd[pos].edge == arc.edge) {
                                if (arc.tail == d.outer_end(pos)) arc.tail = d.dangling(pos);
                                if (arc.head == d.outer_end(pos)) arc.head = d.dangling(pos);
                            }
                        s.push_back(arc);
                    }
                    auto direct = psaw_count(DiscState::from_disc(h, d, self, other, s, attrs));
                    CHECK(stitched_value(stitch_disc(h, d, self, other, s, attrs)) == direct);
                }
            }
    }
}

TEST_CASE("next_step prefers zero-labelled slots") {
    auto h = prism_graph(5);
    auto sep = find_cycle_separator(h);
    auto [d1, d2] = split_discs(h, sep);
    const int k = sep.length();
    REQUIRE(k >= 3);
    Labelling pair{std::vector<int>(k, -1)};
    pair.partner[0] = 1;
    pair.partner[1] = 0;
    auto st = DiscState::from_disc(h, d1, pair, pair, {}, EdgeAttrs::plain(h.num_edges(), 0));
    auto step = st.next_step();
    CHECK(step.slot >= 2);
    CHECK((step.op == DiscState::Op::SingleEdge || step.op == DiscState::Op::ParallelEdge));
}

TEST_CASE("zero labelling on a one-vertex disc") {
    auto h = k4_graph();
    auto sep = find_cycle_separator(h);
    auto [d1, d2] = split_discs(h, sep);
    Labelling zero{std::vector<int>(sep.length(), -1)};
    auto attrs = EdgeAttrs::plain(h.num_edges(), 0);
    // A disc with one interior vertex has no cycle, so only the empty one.
    const DiscGraph& small = d1.interior.size() == 1 ? d1 : d2;
    CHECK(stitched_value(stitch_disc(h, small, zero, zero, {}, attrs)) == LengthPoly::monomial(0));
}

TEST_CASE("trace output names the operations") {
    auto h = dodecahedron_graph();
    auto sep = find_cycle_separator(h);
    auto [d1, d2] = split_discs(h, sep);
    Labelling zero{std::vector<int>(sep.length(), -1)};
    std::ostringstream log;
    stitch_disc(h, d1.interior.size() > 2 ? d1 : d2, zero, zero, {}, EdgeAttrs::plain(h.num_edges(), 0), &log);
    CHECK(log.str().find("stitch:") != std::string::npos);
}
