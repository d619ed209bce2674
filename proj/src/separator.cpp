#include "cyclecount/separator.hpp"

#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace cyclecount {

namespace {

// G endpoints of H edge e.
std::array<int, 2> g_ends(const CubicPlanarGraph& h, int e) { return {h.face_of({e, 0}), h.face_of({e, 1})}; }

// Canonical (vertices, edges) under rotation and reversal.
std::pair<std::vector<int>, std::vector<int>> canonical_cycle(const std::vector<int>& vs, const std::vector<int>& es) {
    const int k = static_cast<int>(vs.size());
    std::vector<int> rv(k), re(k);
    for (int i = 0; i < k; ++i) {
        rv[i] = vs[k - 1 - i];
        re[i] = es[((k - 2 - i) % k + k) % k];
    }
    std::pair<std::vector<int>, std::vector<int>> best;
    bool have = false;
    for (int dir = 0; dir < 2; ++dir) {
        const auto& bv = dir == 0 ? vs : rv;
        const auto& be = dir == 0 ? es : re;
        for (int r = 0; r < k; ++r) {
            std::pair<std::vector<int>, std::vector<int>> c;
            for (int i = 0; i < k; ++i) {
                c.first.push_back(bv[(r + i) % k]);
                c.second.push_back(be[(r + i) % k]);
            }
            if (!have || c < best) {
                best = std::move(c);
                have = true;
            }
        }
    }
    return best;
}

}  // namespace

SeparatorCycle separator_from_cycle(const CubicPlanarGraph& h, std::vector<int> vertices, std::vector<int> edges) {
    const int k = static_cast<int>(edges.size());
    if (k == 0 || static_cast<int>(vertices.size()) != k)
        throw std::invalid_argument("separator cycle needs matching vertex and edge lists");
    std::vector<char> on_cycle(h.num_faces(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= h.num_faces() || on_cycle[v]) throw std::invalid_argument("separator cycle is not simple");
        on_cycle[v] = 1;
    }
    std::vector<char> cut(h.num_edges(), 0);
    for (int i = 0; i < k; ++i) {
        int e = edges[i];
        if (e < 0 || e >= h.num_edges() || cut[e]) throw std::invalid_argument("separator cycle repeats an edge");
        cut[e] = 1;
        auto ge = g_ends(h, e);
        int a = vertices[i], b = vertices[(i + 1) % k];
        if (!((ge[0] == a && ge[1] == b) || (ge[0] == b && ge[1] == a)))
            throw std::invalid_argument("separator edge does not join consecutive cycle vertices");
    }

    SeparatorCycle sc;
    sc.vertices = std::move(vertices);
    sc.edges = std::move(edges);
    sc.vertex_region.assign(h.num_vertices(), -1);
    int regions = 0;
    for (int s = 0; s < h.num_vertices(); ++s) {
        if (sc.vertex_region[s] >= 0) continue;
        if (regions == 2) throw std::invalid_argument("separator edges do not cut H into two parts");
        std::queue<int> q;
        q.push(s);
        sc.vertex_region[s] = regions;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : h.rotation(v)) {
                if (cut[e]) continue;
                int w = h.other_end(e, v);
                if (sc.vertex_region[w] < 0) {
                    sc.vertex_region[w] = regions;
                    q.push(w);
                }
            }
        }
        ++regions;
    }
    if (regions != 2) throw std::invalid_argument("separator edges do not cut H into two parts");
    for (int e : sc.edges)
        if (sc.vertex_region[h.ends(e)[0]] == sc.vertex_region[h.ends(e)[1]])
            throw std::invalid_argument("separator edge does not cross between the discs");
    for (int f = 0; f < h.num_faces(); ++f) {
        if (on_cycle[f]) continue;
        int r = sc.vertex_region[h.tail(h.faces()[f][0])];
        (r == 0 ? sc.side_b : sc.side_c).push_back(f);
    }
    return sc;
}

SeparatorCycle find_cycle_separator(const CubicPlanarGraph& h) {
    const int n = h.num_faces();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, H edge)
    for (int e = 0; e < h.num_edges(); ++e) {
        auto [a, b] = g_ends(h, e);
        adj[a].push_back({b, e});
        if (a != b) adj[b].push_back({a, e});
    }

    bool have = false;
    std::pair<std::vector<int>, std::vector<int>> best;
    SeparatorCycle best_sc;
    std::vector<int> parent(n), parent_edge(n), depth(n);
    for (int root = 0; root < n; ++root) {
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::fill(depth.begin(), depth.end(), -1);
        std::queue<int> q;
        q.push(root);
        depth[root] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : adj[v])
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    parent_edge[w] = e;
                    q.push(w);
                }
        }
        for (int e = 0; e < h.num_edges(); ++e) {
            auto [a, b] = g_ends(h, e);
            if (parent_edge[a] == e || parent_edge[b] == e) continue;
            // Length before building anything, to skip hopeless candidates.
            int x = a, y = b, len = 1;
            while (x != y) {
                if (depth[x] >= depth[y]) {
                    x = parent[x];
                } else {
                    y = parent[y];
                }
                ++len;
            }
            if (have && len > static_cast<int>(best.first.size())) continue;
            int lca = x;
            std::vector<int> vs, es, tail_v, tail_e;
            for (int u = a; u != lca; u = parent[u]) {
                vs.push_back(u);
                es.push_back(parent_edge[u]);
            }
            vs.push_back(lca);
            for (int u = b; u != lca; u = parent[u]) {
                tail_v.push_back(u);
                tail_e.push_back(parent_edge[u]);
            }
            for (int i = static_cast<int>(tail_v.size()) - 1; i >= 0; --i) {
                es.push_back(tail_e[i]);
                vs.push_back(tail_v[i]);
            }
            es.push_back(e);
            auto canon = canonical_cycle(vs, es);
            SeparatorCycle sc = separator_from_cycle(h, vs, es);
            if (3 * sc.balance() > 2 * n) continue;
            if (have && canon.first.size() == best.first.size()) {
                if (sc.balance() > best_sc.balance()) continue;
                if (sc.balance() == best_sc.balance() && !(canon < best)) continue;
            }
            best = std::move(canon);
            best_sc = std::move(sc);
            have = true;
        }
    }
    if (!have) throw std::runtime_error("no balanced fundamental cycle separator found");
    return separator_from_cycle(h, best.first, best.second);
}

std::vector<BoundaryEdge> boundary_edges(const CubicPlanarGraph& h, const SeparatorCycle& a) {
    std::vector<BoundaryEdge> out;
    for (int e : a.edges) {
        auto [u, v] = h.ends(e);
        if (a.vertex_region[u] == 1) std::swap(u, v);
        out.push_back({e, u, v});
    }
    return out;
}

DiscSides disc_sides(const CubicPlanarGraph& h, const SeparatorCycle& a) {
    DiscSides s;
    s.vertex_side = a.vertex_region;
    s.separator_edge.assign(h.num_edges(), 0);
    for (int e : a.edges) s.separator_edge[e] = 1;
    return s;
}

std::pair<DiscGraph, DiscGraph> split_discs(const CubicPlanarGraph& h, const SeparatorCycle& a) {
    std::pair<DiscGraph, DiscGraph> out;
    DiscGraph* ds[2] = {&out.first, &out.second};
    auto bnd = boundary_edges(h, a);
    for (int i = 0; i < 2; ++i) {
        ds[i]->which = i;
        ds[i]->dangling_base = h.num_vertices();
        ds[i]->boundary = bnd;
    }
    for (int v = 0; v < h.num_vertices(); ++v) ds[a.vertex_region[v]]->interior.push_back(v);
    std::vector<char> cut(h.num_edges(), 0);
    for (int e : a.edges) cut[e] = 1;
    for (int e = 0; e < h.num_edges(); ++e)
        if (!cut[e]) ds[a.vertex_region[h.ends(e)[0]]]->interior_edges.push_back(e);
    return out;
}

std::optional<Labelling> trace_labelling(const CubicPlanarGraph& h, const DiscGraph& d, const std::vector<int>& p) {
    const int k = static_cast<int>(d.boundary.size());
    std::map<int, int> pos_of_edge;
    for (int i = 0; i < k; ++i) pos_of_edge[d.boundary[i].edge] = i;
    std::vector<char> inside(h.num_vertices(), 0);
    for (int v : d.interior) inside[v] = 1;
    std::map<int, std::vector<int>> inc;
    std::vector<char> used(h.num_edges(), 0);
    for (int e : p) {
        if (e < 0 || e >= h.num_edges() || used[e]) return std::nullopt;
        used[e] = 1;
        for (int v : h.ends(e))
            if (inside[v]) inc[v].push_back(e);
    }
    for (const auto& [v, es] : inc)
        if (es.size() != 2) return std::nullopt;
    for (int e : p) {
        bool interior_edge = inside[h.ends(e)[0]] && inside[h.ends(e)[1]];
        if (!interior_edge && !pos_of_edge.count(e)) return std::nullopt;
    }

    Labelling l{std::vector<int>(k, -1)};
    std::vector<char> visited(h.num_edges(), 0);
    for (int i = 0; i < k; ++i) {
        int e = d.boundary[i].edge;
        if (!used[e] || visited[e]) continue;
        int v = d.inner_end(i);
        visited[e] = 1;
        while (true) {
            const auto& es = inc[v];
            int nxt = es[0] == e ? es[1] : es[0];
            if (visited[nxt]) return std::nullopt;
            visited[nxt] = 1;
            e = nxt;
            auto it = pos_of_edge.find(e);
            if (it != pos_of_edge.end()) {
                l.partner[i] = it->second;
                l.partner[it->second] = i;
                break;
            }
            v = h.other_end(e, v);
        }
    }
    int leftover = 0;
    for (int e : p) leftover += visited[e] ? 0 : 1;
    if (leftover > 0) {
        if (!l.is_zero()) return std::nullopt;
        std::vector<int> rest;
        for (int e : p) rest.push_back(e);
        if (!cycle_traversal(h, rest, nullptr)) return std::nullopt;
    }
    return l;
}

}  // namespace cyclecount
