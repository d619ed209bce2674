#include "cyclecount/generators.hpp"

#include "cyclecount/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cyclecount {

CubicPlanarGraph graph_from_drawing(const std::vector<std::pair<double, double>>& points,
                                    const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<std::pair<double, int>>> around(n);
    std::vector<std::array<int, 2>> ends;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        auto [u, v] = edges[e];
        ends.push_back({u, v});
        around[u].push_back({std::atan2(points[v].second - points[u].second, points[v].first - points[u].first), e});
        around[v].push_back({std::atan2(points[u].second - points[v].second, points[u].first - points[v].first), e});
    }
    std::vector<std::array<int, 3>> rotation(n);
    for (int v = 0; v < n; ++v) {
        if (around[v].size() != 3) throw GraphError("degree", v, "drawing vertex " + std::to_string(v) + " is not cubic");
        std::sort(around[v].begin(), around[v].end());
        for (int i = 0; i < 3; ++i) rotation[v][i] = around[v][i].second;
    }
    return CubicPlanarGraph::from_rotation(std::move(ends), std::move(rotation));
}

CubicPlanarGraph theta_graph() {
    // Vertices 0, 1 joined by edges 0, 1, 2.
    return CubicPlanarGraph::from_rotation({{0, 1}, {0, 1}, {0, 1}}, {{0, 1, 2}, {2, 1, 0}});
}

CubicPlanarGraph k4_graph() {
    return graph_from_drawing({{0, 0}, {0, 3}, {-3, -2}, {3, -2}}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
}

CubicPlanarGraph prism_graph(int n) {
    if (n < 3) throw GraphError("malformed", n, "prism needs at least 3 sides");
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < n; ++i) {
            double a = 2 * std::numbers::pi * i / n;
            double rad = r == 0 ? 2.0 : 1.0;
            pts.push_back({rad * std::cos(a), rad * std::sin(a)});
        }
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + 1) % n});
    for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
    return graph_from_drawing(pts, edges);
}

CubicPlanarGraph dodecahedron_graph() {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    auto at = [](double rad, double deg) {
        double a = deg * std::numbers::pi / 180.0;
        return std::make_pair(rad * std::cos(a), rad * std::sin(a));
    };
    for (int k = 0; k < 5; ++k) pts.push_back(at(3.0, 90 + 72 * k));       // outer 0..4
    for (int j = 0; j < 10; ++j) pts.push_back(at(2.0, 90 + 36 * j));      // ring 5..14
    for (int k = 0; k < 5; ++k) pts.push_back(at(1.0, 90 + 36 + 72 * k));  // inner 15..19
    for (int k = 0; k < 5; ++k) edges.push_back({k, (k + 1) % 5});
    for (int j = 0; j < 10; ++j) edges.push_back({5 + j, 5 + (j + 1) % 10});
    for (int k = 0; k < 5; ++k) edges.push_back({15 + k, 15 + (k + 1) % 5});
    for (int k = 0; k < 5; ++k) edges.push_back({k, 5 + 2 * k});
    for (int k = 0; k < 5; ++k) edges.push_back({5 + 2 * k + 1, 15 + k});
    return graph_from_drawing(pts, edges);
}

CubicPlanarGraph dumbbell_graph() {
    // Each half is K4 with one outer edge subdivided; the subdivision
    // vertices 4 and 9 are joined by the bridge.
    std::vector<std::pair<double, double>> pts = {{-4, 0}, {-3, 2}, {-3, -2}, {-6, 0}, {-2, 0},
                                                  {4, 0},  {3, 2},  {3, -2},  {6, 0},  {2, 0}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 4}, {4, 2},
                                              {5, 6}, {5, 7}, {5, 8}, {6, 8}, {7, 8}, {6, 9}, {9, 7},
                                              {4, 9}};
    return graph_from_drawing(pts, edges);
}

std::string petersen_text() {
    // Outer 5-cycle 0..4, spokes i -> 5+i, inner pentagram 5+i -> 5+(i+2)%5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
    std::vector<std::pair<double, double>> pts;
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < 5; ++i) {
            double a = 2 * std::numbers::pi * i / 5 + std::numbers::pi / 2;
            double rad = r == 0 ? 2.0 : 1.0;
            pts.push_back({rad * std::cos(a), rad * std::sin(a)});
        }
    std::vector<std::vector<std::pair<double, int>>> around(10);
    for (int e = 0; e < 15; ++e) {
        auto [u, v] = edges[e];
        around[u].push_back({std::atan2(pts[v].second - pts[u].second, pts[v].first - pts[u].first), e});
        around[v].push_back({std::atan2(pts[u].second - pts[v].second, pts[u].first - pts[v].first), e});
    }
    std::ostringstream os;
    os << "cubic-planar v1\nvertices 10\n";
    for (int e = 0; e < 15; ++e) os << "edge " << e << " " << edges[e].first << " " << edges[e].second << "\n";
    for (int v = 0; v < 10; ++v) {
        std::sort(around[v].begin(), around[v].end());
        os << "rot " << v;
        for (auto [ang, e] : around[v]) os << " " << e;
        os << "\n";
    }
    return os.str();
}

CubicPlanarGraph random_cubic_planar(int n, std::mt19937_64& rng, bool allow_bigons) {
    if (n < 4 || n % 2) throw GraphError("malformed", n, "random cubic graph needs an even n >= 4");
    CubicPlanarGraph h = k4_graph();
    while (h.num_vertices() < n) {
        std::vector<std::array<int, 2>> ends;
        std::vector<std::array<int, 3>> rot;
        for (int e = 0; e < h.num_edges(); ++e) ends.push_back(h.ends(e));
        for (int v = 0; v < h.num_vertices(); ++v) rot.push_back(h.rotation(v));
        const auto& face = h.faces()[std::uniform_int_distribution<int>(0, h.num_faces() - 1)(rng)];
        int m = static_cast<int>(face.size());
        int i = std::uniform_int_distribution<int>(0, m - 1)(rng);
        int j = std::uniform_int_distribution<int>(0, m - 1)(rng);
        if (!allow_bigons)
            while (j == i) j = std::uniform_int_distribution<int>(0, m - 1)(rng);
        if (i > j) std::swap(i, j);
        auto replace = [&](int v, int from, int to) {
            for (int& x : rot[v])
                if (x == from) x = to;
        };
        const int link = static_cast<int>(ends.size());
        ends.push_back({-1, -1});
        auto subdivide = [&](Dart d, int x) {
            // Dart u -> v along e becomes u -> x (e) and x -> v (fresh edge);
            // the joining edge sits on this dart's face side.
            int u = h.tail(d), v = h.head(d);
            int e = d.edge;
            int fresh = static_cast<int>(ends.size());
            ends.push_back({x, v});
            ends[e] = {u, x};
            replace(v, e, fresh);
            rot.push_back({e, link, fresh});
            return fresh;
        };
        int x = static_cast<int>(rot.size());
        if (i == j) {
            Dart d = face[i];
            int u = h.tail(d), v = h.head(d);
            int e = d.edge;
            int y = x + 1;
            int mid = static_cast<int>(ends.size());
            int last = mid + 1;
            ends.push_back({x, y});
            ends.push_back({y, v});
            ends[e] = {u, x};
            replace(v, e, last);
            rot.push_back({e, link, mid});
            rot.push_back({mid, link, last});
            ends[link] = {x, y};
        } else {
            subdivide(face[i], x);
            // The second dart's edge object is untouched by the first split.
            subdivide(face[j], x + 1);
            ends[link] = {x, x + 1};
        }
        h = CubicPlanarGraph::from_rotation(std::move(ends), std::move(rot));
    }
    return h;
}

}  // namespace cyclecount
