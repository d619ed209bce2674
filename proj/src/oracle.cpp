#include "cyclecount/oracle.hpp"

#include "cyclecount/boundary.hpp"

#include <algorithm>
#include <functional>

namespace cyclecount {

std::vector<std::vector<int>> enumerate_cycles(const CubicPlanarGraph& h, const CycleFilter& f) {
    std::vector<char> must(h.num_edges(), 0), forbid(h.num_edges(), 0);
    for (int e : f.must) must.at(e) = 1;
    for (int e : f.forbid) forbid.at(e) = 1;

    std::vector<std::vector<int>> out;
    auto accept = [&](std::vector<int> edges) {
        if (f.length && static_cast<int>(edges.size()) != *f.length) return;
        for (int e : f.must)
            if (std::find(edges.begin(), edges.end(), e) == edges.end()) return;
        if (!f.s.empty() && (edges.empty() || !conforms(h, edges, f.s))) return;
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));
    };
    if (f.include_empty) accept({});

    // Each cycle is found once: from its smallest edge, closing a path that
    // uses only larger edges.
    std::vector<char> visited(h.num_vertices(), 0);
    std::vector<int> path;
    for (int e0 = 0; e0 < h.num_edges(); ++e0) {
        if (forbid[e0]) continue;
        const int from = h.ends(e0)[1], target = h.ends(e0)[0];
        std::function<void(int)> extend = [&](int v) {
            for (int e : h.rotation(v)) {
                if (e <= e0 || forbid[e]) continue;
                if (!path.empty() && path.back() == e) continue;
                int w = h.other_end(e, v);
                if (w == target) {
                    path.push_back(e);
                    std::vector<int> cyc = path;
                    cyc.push_back(e0);
                    accept(std::move(cyc));
                    path.pop_back();
                } else if (!visited[w]) {
                    visited[w] = 1;
                    path.push_back(e);
                    extend(w);
                    path.pop_back();
                    visited[w] = 0;
                }
            }
        };
        visited[target] = 1;
        visited[from] = 1;
        extend(from);
        visited[from] = 0;
        visited[target] = 0;
    }
    return out;
}

BigInt oracle_count(const CubicPlanarGraph& h, const CycleFilter& f) {
    return static_cast<BigInt>(enumerate_cycles(h, f).size());
}

std::map<int, BigInt> oracle_count_by_length(const CubicPlanarGraph& h, const CycleFilter& f) {
    CycleFilter g = f;
    g.length.reset();
    std::map<int, BigInt> out;
    for (const auto& c : enumerate_cycles(h, g)) out[static_cast<int>(c.size())] += 1;
    return out;
}

}  // namespace cyclecount
