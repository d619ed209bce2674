#include "cyclecount/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace cyclecount {

namespace {

std::string label_str(std::int64_t x) { return std::to_string(x); }

}  // namespace

CubicPlanarGraph CubicPlanarGraph::from_rotation(std::vector<std::array<int, 2>> ends,
                                                 std::vector<std::array<int, 3>> rotation,
                                                 std::vector<std::int64_t> vertex_labels,
                                                 std::vector<std::int64_t> edge_labels) {
    CubicPlanarGraph g;
    const int nv = static_cast<int>(rotation.size());
    const int ne = static_cast<int>(ends.size());
    if (vertex_labels.empty())
        for (int v = 0; v < nv; ++v) vertex_labels.push_back(v);
    if (edge_labels.empty())
        for (int e = 0; e < ne; ++e) edge_labels.push_back(e);
    if (static_cast<int>(vertex_labels.size()) != nv || static_cast<int>(edge_labels.size()) != ne)
        throw GraphError("malformed", -1, "label count does not match graph size");
    if (nv == 0) throw GraphError("malformed", -1, "graph has no vertices");

    std::vector<int> degree(nv, 0);
    for (int e = 0; e < ne; ++e) {
        auto [u, v] = ends[e];
        if (u < 0 || u >= nv || v < 0 || v >= nv)
            throw GraphError("malformed", edge_labels[e], "edge " + label_str(edge_labels[e]) + " has an unknown endpoint");
        if (u == v) throw GraphError("loop", edge_labels[e], "edge " + label_str(edge_labels[e]) + " is a loop");
        ++degree[u];
        ++degree[v];
    }
    for (int v = 0; v < nv; ++v)
        if (degree[v] != 3)
            throw GraphError("degree", vertex_labels[v],
                             "vertex " + label_str(vertex_labels[v]) + " has degree " + std::to_string(degree[v]));

    for (int v = 0; v < nv; ++v) {
        const auto& r = rotation[v];
        for (int i = 0; i < 3; ++i) {
            int e = r[i];
            if (e < 0 || e >= ne || (ends[e][0] != v && ends[e][1] != v))
                throw GraphError("rotation", vertex_labels[v],
                                 "rotation at vertex " + label_str(vertex_labels[v]) + " lists a non-incident edge");
            for (int j = 0; j < i; ++j)
                if (r[j] == e)
                    throw GraphError("rotation", vertex_labels[v],
                                     "rotation at vertex " + label_str(vertex_labels[v]) + " repeats an edge");
        }
    }

    std::vector<char> seen(nv, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : rotation[v]) {
            int w = ends[e][0] == v ? ends[e][1] : ends[e][0];
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    for (int v = 0; v < nv; ++v)
        if (!seen[v])
            throw GraphError("disconnected", vertex_labels[v],
                             "vertex " + label_str(vertex_labels[v]) + " is not reachable from the first vertex");

    g.ends_ = std::move(ends);
    g.rotation_ = std::move(rotation);
    g.vertex_labels_ = std::move(vertex_labels);
    g.edge_labels_ = std::move(edge_labels);

    g.dart_face_.assign(2 * ne, -1);
    for (int start = 0; start < 2 * ne; ++start) {
        if (g.dart_face_[start] >= 0) continue;
        int f = static_cast<int>(g.faces_.size());
        g.faces_.emplace_back();
        Dart d{start / 2, start % 2};
        while (g.dart_face_[2 * d.edge + d.side] < 0) {
            g.dart_face_[2 * d.edge + d.side] = f;
            g.faces_.back().push_back(d);
            d = g.next_in_face(d);
        }
    }
    if (nv - ne + g.num_faces() != 2)
        throw GraphError("euler", -1,
                         "rotation system is not planar: V - E + F = " + std::to_string(nv - ne + g.num_faces()));
    return g;
}

Dart CubicPlanarGraph::next_in_face(Dart d) const {
    int v = head(d);
    const auto& r = rotation_[v];
    int pos = r[0] == d.edge ? 0 : (r[1] == d.edge ? 1 : 2);
    return dart_from(r[(pos + 1) % 3], v);
}

int CubicPlanarGraph::vertex_index(std::int64_t label) const {
    auto it = std::find(vertex_labels_.begin(), vertex_labels_.end(), label);
    return it == vertex_labels_.end() ? -1 : static_cast<int>(it - vertex_labels_.begin());
}

int CubicPlanarGraph::edge_index(std::int64_t label) const {
    auto it = std::find(edge_labels_.begin(), edge_labels_.end(), label);
    return it == edge_labels_.end() ? -1 : static_cast<int>(it - edge_labels_.begin());
}

PlanarTriangulation dual(const CubicPlanarGraph& h) {
    PlanarTriangulation g;
    for (const auto& face : h.faces()) {
        std::vector<int> rot;
        for (Dart d : face) rot.push_back(d.edge);
        g.vertex_rotation.push_back(std::move(rot));
    }
    for (int e = 0; e < h.num_edges(); ++e) g.edge_ends.push_back({h.face_of({e, 0}), h.face_of({e, 1})});
    for (int v = 0; v < h.num_vertices(); ++v) g.faces.push_back(h.rotation(v));
    return g;
}

CubicPlanarGraph dual(const PlanarTriangulation& g) {
    std::vector<std::array<int, 2>> ends(g.num_edges(), {-1, -1});
    for (int f = 0; f < g.num_faces(); ++f)
        for (int e : g.faces[f]) {
            if (e < 0 || e >= g.num_edges()) throw GraphError("malformed", e, "triangle refers to an unknown edge");
            if (ends[e][0] < 0)
                ends[e][0] = f;
            else if (ends[e][1] < 0)
                ends[e][1] = f;
            else
                throw GraphError("malformed", e, "edge lies on more than two triangles");
        }
    for (int e = 0; e < g.num_edges(); ++e)
        if (ends[e][1] < 0) throw GraphError("malformed", e, "edge lies on fewer than two triangles");
    return CubicPlanarGraph::from_rotation(std::move(ends), g.faces);
}

TriangulationReport validate_triangulation(const PlanarTriangulation& g) {
    TriangulationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };
    std::vector<int> on_faces(g.num_edges(), 0);
    for (int f = 0; f < g.num_faces(); ++f) {
        auto t = g.faces[f];
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            fail("face " + std::to_string(f) + " repeats an edge");
        std::map<int, int> corner;
        for (int e : t) {
            if (e < 0 || e >= g.num_edges()) {
                fail("face " + std::to_string(f) + " has an unknown edge");
                continue;
            }
            ++on_faces[e];
            ++corner[g.edge_ends[e][0]];
            ++corner[g.edge_ends[e][1]];
        }
        for (auto [v, c] : corner)
            if (c != 2) fail("face " + std::to_string(f) + " is not a closed triangle");
    }
    for (int e = 0; e < g.num_edges(); ++e)
        if (on_faces[e] != 2) fail("edge " + std::to_string(e) + " lies on " + std::to_string(on_faces[e]) + " faces");
    if (g.num_vertices() - g.num_edges() + g.num_faces() != 2) fail("Euler characteristic is not 2");
    if (g.num_vertices() >= 3)
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.vertex_rotation[v].size() < 2) fail("vertex " + std::to_string(v) + " has degree below 2");
    if (rep.ok) {
        try {
            dual(g);
        } catch (const GraphError& err) {
            fail(std::string("dual is not cubic planar: ") + err.what());
        }
    }
    return rep;
}

bool cycle_traversal(const CubicPlanarGraph& h, const std::vector<int>& edges, std::vector<Dart>* out) {
    if (edges.empty()) {
        if (out) out->clear();
        return true;
    }
    std::map<int, std::vector<int>> inc;
    std::vector<char> in_set(h.num_edges(), 0);
    for (int e : edges) {
        if (e < 0 || e >= h.num_edges() || in_set[e]) return false;
        in_set[e] = 1;
        inc[h.ends(e)[0]].push_back(e);
        inc[h.ends(e)[1]].push_back(e);
    }
    for (const auto& [v, es] : inc)
        if (es.size() != 2) return false;
    std::vector<Dart> walk;
    int e = edges[0];
    int v = h.ends(e)[0];
    do {
        Dart d = h.dart_from(e, v);
        walk.push_back(d);
        v = h.head(d);
        const auto& es = inc[v];
        e = es[0] == e ? es[1] : es[0];
    } while (walk.size() <= edges.size() && !(e == edges[0] && v == h.ends(edges[0])[0]));
    if (walk.size() != edges.size()) return false;
    if (out) *out = std::move(walk);
    return true;
}

}  // namespace cyclecount
