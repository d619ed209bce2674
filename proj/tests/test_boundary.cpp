#include "cyclecount/boundary.hpp"
#include "cyclecount/generators.hpp"
#include "cyclecount/oracle.hpp"
#include "cyclecount/separator.hpp"

#include <doctest.h>

#include <set>

using namespace cyclecount;

namespace {

// Arc sequence with distinct edges and vertices, as a stand-in for S or T.
ArcSequence chain(int first_edge, int n) {
    ArcSequence out;
    for (int i = 0; i < n; ++i) out.push_back({first_edge + i, 100 + 2 * (first_edge + i), 101 + 2 * (first_edge + i)});
    return out;
}

}  // namespace

TEST_CASE("labelling counts are Motzkin numbers") {
    const int motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511};
    for (int m = 0; m <= 12; ++m) {
        auto ls = enumerate_labellings(m);
        CHECK(static_cast<int>(ls.size()) == motzkin[m]);
        std::set<Labelling> distinct(ls.begin(), ls.end());
        CHECK(distinct.size() == ls.size());
        for (const auto& l : ls) CHECK(is_valid_labelling(l));
    }
}

TEST_CASE("labelling validity") {
    CHECK(is_valid_labelling({{-1, -1, -1}}));
    CHECK(is_valid_labelling({{1, 0, 3, 2}}));
    CHECK(is_valid_labelling({{3, 2, 1, 0}}));
    CHECK_FALSE(is_valid_labelling({{2, 3, 0, 1}}));  // crossing
    CHECK_FALSE(is_valid_labelling({{0, -1}}));       // fixed point
    CHECK_FALSE(is_valid_labelling({{1, -1}}));       // not symmetric
    CHECK_FALSE(is_valid_labelling({{5, -1}}));       // out of range
}

TEST_CASE("compatibility check") {
    Labelling zero{{-1, -1, -1, -1}};
    CHECK(compatibility_check(zero, zero));
    Labelling a{{1, 0, -1, -1}};
    CHECK(compatibility_check(a, a));
    CHECK_FALSE(compatibility_check(a, zero));
    // Two chords on each side: the same pairs close two separate cycles,
    // shifted pairs close one.
    Labelling two{{1, 0, 3, 2}};
    Labelling shifted{{3, 2, 1, 0}};
    CHECK_FALSE(compatibility_check(two, two));
    CHECK(compatibility_check(two, shifted));
    // Different supports never match.
    Labelling b{{-1, 2, 1, -1}};
    CHECK_FALSE(compatibility_check(a, b));
    CHECK_FALSE(compatibility_check(Labelling{{1, 0}}, Labelling{{1, 0, -1}}));
}

TEST_CASE("T alternates between the discs") {
    std::vector<BoundaryEdge> bnd = {{10, 0, 5}, {11, 1, 6}, {12, 2, 7}, {13, 3, 8}};
    Labelling two{{1, 0, 3, 2}};
    Labelling shifted{{3, 2, 1, 0}};
    auto t = build_T(two, shifted, bnd);
    REQUIRE(t.size() == 4);
    std::set<int> edges;
    for (std::size_t i = 0; i < t.size(); ++i) {
        edges.insert(t[i].edge);
        // Consecutive arcs leave from the disc the previous one entered.
        bool enters_first = t[i].head < 5;
        bool next_leaves_first = t[(i + 1) % t.size()].tail < 5;
        CHECK(enters_first == next_leaves_first);
    }
    CHECK(edges.size() == 4);
    CHECK(build_T(Labelling{{-1, -1, -1, -1}}, Labelling{{-1, -1, -1, -1}}, bnd).empty());
}

TEST_CASE("cyclic equivalence") {
    ArcSequence s = chain(0, 4);
    ArcSequence r = {s[2], s[3], s[0], s[1]};
    CHECK(equivalent(s, r));
    CHECK(equivalent(s, reversed(s)));
    ArcSequence swapped = {s[1], s[0], s[2], s[3]};
    CHECK_FALSE(equivalent(s, swapped));
    ArcSequence flipped = {s[0].reversed(), s[1], s[2], s[3]};
    CHECK_FALSE(equivalent(s, flipped));
    CHECK(canonical_form(r) == canonical_form(reversed(s)));
}

TEST_CASE("conformance on a traversal") {
    std::vector<Arc> trav = {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}};
    CHECK(conforms(trav, {}));
    CHECK(conforms(trav, {{1, 1, 2}}));
    CHECK(conforms(trav, {{1, 2, 1}}));  // walked the other way round
    CHECK(conforms(trav, {{2, 2, 3}, {0, 0, 1}}));
    CHECK(conforms(trav, {{0, 1, 0}, {3, 0, 3}}));
    CHECK_FALSE(conforms(trav, {{0, 0, 1}, {1, 2, 1}}));  // mixed directions
    CHECK_FALSE(conforms(trav, {{0, 0, 1}, {2, 2, 3}, {1, 1, 2}}));  // wrong order
    CHECK_FALSE(conforms(trav, {{7, 0, 1}}));
    CHECK_FALSE(conforms(trav, {{0, 0, 1}, {0, 0, 1}}));
}

TEST_CASE("interleavings of single arcs") {
    auto s = chain(0, 1), t = chain(10, 1);
    // S fixed; T inserted after S in either orientation.
    CHECK(enumerate_interleavings(s, t).size() == 2);
    CHECK(enumerate_interleavings({}, t).size() == 1);
    CHECK(enumerate_interleavings(s, {}).size() == 1);
}

TEST_CASE("interleavings keep S verbatim and cover T") {
    auto s = chain(0, 3), t = chain(10, 2);
    auto ins = enumerate_interleavings(s, t);
    std::set<ArcSequence> distinct;
    for (const auto& in : ins) {
        distinct.insert(canonical_form(in.arcs));
        CHECK(in.arcs.size() == 5);
        ArcSequence only_s;
        for (std::size_t i = 0; i < in.arcs.size(); ++i)
            if (in.origin[i] == 1) only_s.push_back(in.arcs[i]);
        CHECK(only_s == s);
    }
    CHECK(distinct.size() == ins.size());
    // 2t * C(s+t, t) with s = 3, t = 2.
    CHECK(ins.size() <= 2 * 2 * 10);
}

TEST_CASE("interleavings with a shared edge match orientation") {
    ArcSequence s = {{5, 1, 2}, {6, 3, 4}};
    ArcSequence t = {{5, 1, 2}, {9, 7, 8}};
    auto ins = enumerate_interleavings(s, t);
    CHECK_FALSE(ins.empty());
    for (const auto& in : ins) {
        CHECK(in.arcs.size() == 3);
        CHECK(in.origin[0] == 3);
    }
    ArcSequence t_flipped = {{5, 2, 1}, {9, 7, 8}};
    // Reversing T flips arc 5 back, so the merge is still possible.
    CHECK_FALSE(enumerate_interleavings(s, t_flipped).empty());
    ArcSequence t_bad = {{5, 2, 1}, {9, 7, 8}, {6, 3, 4}};
    ArcSequence s2 = {{5, 1, 2}, {6, 3, 4}};
    // In either direction of T one of the shared arcs points the wrong way.
    CHECK(enumerate_interleavings(s2, t_bad).empty());
}

TEST_CASE("oracle cycles induce compatible labellings") {
    for (const auto& h : {prism_graph(5), dodecahedron_graph()}) {
        auto sep = find_cycle_separator(h);
        auto [d1, d2] = split_discs(h, sep);
        for (const auto& c : enumerate_cycles(h)) {
            std::vector<int> in1, in2;
            std::set<int> sep_edges(sep.edges.begin(), sep.edges.end());
            for (int e : c) {
                if (sep_edges.count(e)) {
                    in1.push_back(e);
                    in2.push_back(e);
                } else if (sep.vertex_region[h.ends(e)[0]] == 0) {
                    in1.push_back(e);
                } else {
                    in2.push_back(e);
                }
            }
            auto l1 = trace_labelling(h, d1, in1);
            auto l2 = trace_labelling(h, d2, in2);
            REQUIRE(l1.has_value());
            REQUIRE(l2.has_value());
            CHECK(compatibility_check(*l1, *l2));
        }
    }
}

TEST_CASE("pruned interleavings equal the filtered ones") {
    std::mt19937_64 rng(404);
    int nonempty = 0;
    for (int g = 0; g < 30; ++g) {
        auto h = random_cubic_planar(10 + 2 * (g % 6), rng, g % 2 == 0);
        auto sep = find_cycle_separator(h);
        auto [d1, d2] = split_discs(h, sep);
        const auto bnd = boundary_edges(h, sep);
        const auto sides = disc_sides(h, sep);
        const auto labellings = enumerate_labellings(sep.length());
        auto cycles = enumerate_cycles(h);
        for (int trial = 0; trial < 20; ++trial) {
            const auto& c = cycles[rng() % cycles.size()];
            std::vector<Dart> walk;
            cycle_traversal(h, c, &walk);
            ArcSequence s;
            for (Dart d : walk)
                if (rng() % 2 == 0) s.push_back({d.edge, h.tail(d), h.head(d)});
            Labelling l1, l2;
            if (trial % 2 == 0) {
                std::set<int> sep_edges(sep.edges.begin(), sep.edges.end());
                std::vector<int> in1, in2;
                for (int e : c) {
                    if (sep_edges.count(e) || sep.vertex_region[h.ends(e)[0]] == 0) in1.push_back(e);
                    if (sep_edges.count(e) || sep.vertex_region[h.ends(e)[0]] == 1) in2.push_back(e);
                }
                auto a = trace_labelling(h, d1, in1), b = trace_labelling(h, d2, in2);
                REQUIRE(a.has_value());
                REQUIRE(b.has_value());
                l1 = *a;
                l2 = *b;
            } else {
                l1 = labellings[rng() % labellings.size()];
                l2 = labellings[rng() % labellings.size()];
                if (!compatibility_check(l1, l2)) continue;
            }
            const auto t = build_T(l1, l2, bnd);
            std::set<ArcSequence> filtered, pruned;
            for (const auto& in : enumerate_interleavings(s, t))
                if (is_valid_interleaving(in, s, t, sides)) filtered.insert(in.arcs);
            for (const auto& in : enumerate_interleavings(s, t, &sides)) {
                CHECK(is_valid_interleaving(in, s, t, sides));
                pruned.insert(in.arcs);
            }
            CHECK(pruned == filtered);
            if (!pruned.empty()) ++nonempty;
        }
    }
    CHECK(nonempty > 50);
}
