#include "cyclecount/applications.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace cyclecount {

namespace {

Subproblem make_problem(const CubicPlanarGraph& h, const std::vector<int>& must, const std::vector<int>& forbid,
                        int weight) {
    Subproblem p{h, EdgeAttrs::plain(h.num_edges(), weight), {}};
    for (int e : must) {
        if (e < 0 || e >= h.num_edges()) throw GraphError("constraint", e, "required edge does not exist");
        p.attrs.must[e] = 1;
    }
    for (int e : forbid) {
        if (e < 0 || e >= h.num_edges()) throw GraphError("constraint", e, "forbidden edge does not exist");
        if (p.attrs.must[e])
            throw GraphError("constraint", h.edge_label(e),
                             "edge " + std::to_string(h.edge_label(e)) + " is both required and forbidden");
        p.attrs.forbid[e] = 1;
    }
    return p;
}

BigInt uniform_below(const BigInt& n, std::mt19937_64& rng) {
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    while (true) {
        BigInt r = 0;
        for (unsigned got = 0; got < bits; got += 64) r = (r << 64) | BigInt(rng());
        r &= (BigInt(1) << bits) - 1;
        if (r < n) return r;
    }
}

}  // namespace

CountResult count_constrained(const CubicPlanarGraph& h, const std::vector<int>& must,
                              const std::vector<int>& forbid, bool include_empty, const EngineOptions& opts) {
    Engine engine(opts);
    CountResult r;
    r.counts = engine.count(make_problem(h, must, forbid, 0));
    if (!include_empty && must.empty()) r.counts -= LengthPoly::monomial(0);
    r.includes_empty = include_empty && must.empty();
    return r;
}

CountResult count_by_length(const CubicPlanarGraph& h, bool include_empty, const EngineOptions& opts) {
    Engine engine(opts);
    CountResult r;
    r.by_length = true;
    r.counts = engine.count(make_problem(h, {}, {}, 1));
    if (!include_empty) r.counts -= LengthPoly::monomial(0);
    r.includes_empty = include_empty;
    return r;
}

BigInt count_length(const CubicPlanarGraph& h, int l, const EngineOptions& opts) {
    if (l < 0) return 0;
    return count_by_length(h, true, opts).counts.coeff(static_cast<std::size_t>(l));
}

BigInt count_partitions_sphere(const CubicPlanarGraph& h, const EngineOptions& opts) {
    return count_cycles(h, false, opts).total();
}

BorderSpec border_from_vertices(const CubicPlanarGraph& h, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    if (k < 2) throw GraphError("constraint", -1, "border needs at least two vertices");
    std::set<int> distinct(vertices.begin(), vertices.end());
    if (static_cast<int>(distinct.size()) != k) throw GraphError("constraint", -1, "border repeats a vertex");
    BorderSpec b;
    b.vertices = vertices;
    for (int i = 0; i < k; ++i) {
        int u = vertices[i], v = vertices[(i + 1) % k];
        if (u < 0 || u >= h.num_vertices()) throw GraphError("constraint", u, "border vertex does not exist");
        int best = -1;
        for (int e : h.rotation(u))
            if (h.other_end(e, u) == v && std::find(b.edges.begin(), b.edges.end(), e) == b.edges.end() &&
                (best < 0 || h.edge_label(e) < h.edge_label(best)))
                best = e;
        if (best < 0)
            throw GraphError("constraint", h.vertex_label(u),
                             "border vertices " + std::to_string(h.vertex_label(u)) + " and " +
                                 std::to_string(h.vertex_label(v)) + " are not adjacent");
        b.edges.push_back(best);
    }
    return b;
}

BigInt count_partitions_bordered(const CubicPlanarGraph& h, const BorderSpec& b, const EngineOptions& opts) {
    const int k = static_cast<int>(b.vertices.size());
    if (k < 2 || static_cast<int>(b.edges.size()) != k) throw GraphError("constraint", -1, "border is not a cycle");
    std::vector<int> check = b.edges;
    if (!cycle_traversal(h, check, nullptr)) throw GraphError("constraint", -1, "border is not a simple cycle");
    for (int i = 0; i < k; ++i) {
        auto [x, y] = h.ends(b.edges[i]);
        int u = b.vertices[i], v = b.vertices[(i + 1) % k];
        if (!((x == u && y == v) || (x == v && y == u)))
            throw GraphError("constraint", h.edge_label(b.edges[i]), "border edge does not join its vertices");
    }
    Engine engine(opts);
    BigInt total = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<int> must(b.edges.begin() + i, b.edges.begin() + j);
            std::set<int> forbid;
            for (int t = 0; t < k; ++t) {
                if (t == i || t == j) continue;
                for (int e : h.rotation(b.vertices[t]))
                    if (std::find(must.begin(), must.end(), e) == must.end()) forbid.insert(e);
            }
            total += engine.count(make_problem(h, must, {forbid.begin(), forbid.end()}, 0)).total();
        }
    return total;
}

std::vector<std::vector<int>> sample_cycles(const CubicPlanarGraph& h, int k, std::uint64_t seed,
                                            const EngineOptions& opts) {
    Engine engine(opts);
    std::vector<int> order(h.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return h.edge_label(a) < h.edge_label(b); });
    const BigInt all = engine.count(make_problem(h, {}, {}, 0)).total() - 1;
    if (all <= 0) throw GraphError("constraint", -1, "graph has no nonempty cycle to sample");

    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> out;
    for (int n = 0; n < k; ++n) {
        std::vector<int> must, forbid;
        BigInt cur = all;
        for (int e : order) {
            must.push_back(e);
            BigInt with = engine.count(make_problem(h, must, forbid, 0)).total();
            if (uniform_below(cur, rng) < with) {
                cur = with;
            } else {
                must.pop_back();
                forbid.push_back(e);
                cur -= with;
            }
        }
        std::sort(must.begin(), must.end());
        out.push_back(std::move(must));
    }
    return out;
}

}  // namespace cyclecount
