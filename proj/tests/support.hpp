#pragma once

// Shared fixtures for the unit tests and the acceptance run.

#include "cyclecount/engine.hpp"
#include "cyclecount/generators.hpp"
#include "cyclecount/oracle.hpp"
#include "cyclecount/separator.hpp"
#include "cyclecount/stitch.hpp"

#include <random>
#include <set>

namespace cyclecount::testing {

// Count of a disc state including its correction, by direct enumeration.
inline LengthPoly state_value(const DiscState& st) {
    if (st.boundary().empty()) return st.correction() + brute_force_base(st.to_subproblem());
    return st.correction() + psaw_count(st);
}

// Small random disc of a random cubic plane graph. Half the time the
// labellings and S come from a real cycle of the graph, so the state has
// something to count; otherwise a random compatible pair (or zero) with
// random must/forbid edges. S always holds the crossing arcs, as it does
// inside the engine.
inline DiscState random_disc_state(std::mt19937_64& rng) {
    while (true) {
        const int n = 8 + 2 * static_cast<int>(rng() % 5);
        auto h = random_cubic_planar(n, rng, rng() % 2 == 0);
        auto sep = find_cycle_separator(h);
        auto discs = split_discs(h, sep);
        const int which = static_cast<int>(rng() % 2);
        const DiscGraph& d = which == 0 ? discs.first : discs.second;
        const DiscGraph& far = which == 0 ? discs.second : discs.first;
        const int k = sep.length();
        EdgeAttrs attrs = EdgeAttrs::plain(h.num_edges(), 1);

        auto in_disc = [&](int e, const DiscGraph& g) {
            for (const auto& b : g.boundary)
                if (b.edge == e) return true;
            return std::find(g.interior_edges.begin(), g.interior_edges.end(), e) != g.interior_edges.end();
        };

        if (rng() % 2 == 0) {
            auto cycles = enumerate_cycles(h);
            const auto& c = cycles[rng() % cycles.size()];
            std::vector<int> mine, theirs;
            for (int e : c) {
                if (in_disc(e, d)) mine.push_back(e);
                if (in_disc(e, far)) theirs.push_back(e);
            }
            auto self = trace_labelling(h, d, mine);
            auto other = trace_labelling(h, far, theirs);
            if (!self || !other) continue;
            std::vector<Dart> walk;
            cycle_traversal(h, c, &walk);
            std::vector<int> pos(h.num_edges(), -1);
            for (int i = 0; i < k; ++i) pos[d.boundary[i].edge] = i;
            std::set<int> inside(d.interior.begin(), d.interior.end());
            ArcSequence s;
            for (Dart w : walk) {
                // Crossing arcs always stay: they are the arcs of T.
                if (!in_disc(w.edge, d) || (pos[w.edge] < 0 && rng() % 3 != 0)) continue;
                Arc a{w.edge, h.tail(w), h.head(w)};
                if (!inside.count(a.tail)) a.tail = d.dangling(pos[a.edge]);
                if (!inside.count(a.head)) a.head = d.dangling(pos[a.edge]);
                s.push_back(a);
            }
            if (rng() % 2 == 0 && !mine.empty()) attrs.must[mine[rng() % mine.size()]] = 1;
            return DiscState::from_disc(h, d, *self, *other, s, attrs);
        }

        auto labellings = enumerate_labellings(k);
        Labelling self{std::vector<int>(k, -1)}, other = self;
        for (int tries = 0; tries < 50; ++tries) {
            const auto& a = labellings[rng() % labellings.size()];
            const auto& b = labellings[rng() % labellings.size()];
            if (compatibility_check(a, b)) {
                self = a;
                other = b;
                break;
            }
        }
        for (int e = 0; e < h.num_edges(); ++e) {
            int r = static_cast<int>(rng() % 12);
            if (r == 0)
                attrs.must[e] = 1;
            else if (r == 1)
                attrs.forbid[e] = 1;
        }
        const auto bnd = boundary_edges(h, sep);
        ArcSequence s;
        for (Arc a : build_T(which == 0 ? self : other, which == 0 ? other : self, bnd)) {
            for (int pos = 0; pos < k; ++pos)
                if (bnd[pos].edge == a.edge) {
                    if (a.tail == d.outer_end(pos)) a.tail = d.dangling(pos);
                    if (a.head == d.outer_end(pos)) a.head = d.dangling(pos);
                }
            s.push_back(a);
        }
        return DiscState::from_disc(h, d, self, other, s, attrs);
    }
}

}  // namespace cyclecount::testing
