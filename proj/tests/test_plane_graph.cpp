#include "cyclecount/generators.hpp"
#include "cyclecount/graph_io.hpp"
#include "cyclecount/plane_graph.hpp"

#include <doctest.h>

using namespace cyclecount;

namespace {

std::string kind_of(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const GraphError& e) {
        return e.kind();
    }
    return "";
}

}  // namespace

TEST_CASE("named graphs have the expected face counts") {
    CHECK(theta_graph().num_faces() == 3);
    CHECK(k4_graph().num_faces() == 4);
    CHECK(prism_graph(3).num_faces() == 5);
    CHECK(prism_graph(4).num_faces() == 6);
    CHECK(prism_graph(5).num_faces() == 7);
    CHECK(dodecahedron_graph().num_faces() == 12);
    auto d = dumbbell_graph();
    CHECK(d.num_vertices() - d.num_edges() + d.num_faces() == 2);
}

TEST_CASE("faces use every dart once") {
    for (const auto& h : {theta_graph(), k4_graph(), dodecahedron_graph(), dumbbell_graph()}) {
        std::vector<int> seen(2 * h.num_edges(), 0);
        for (std::size_t f = 0; f < h.faces().size(); ++f)
            for (Dart d : h.faces()[f]) {
                ++seen[2 * d.edge + d.side];
                CHECK(h.face_of(d) == static_cast<int>(f));
            }
        for (int c : seen) CHECK(c == 1);
    }
}

TEST_CASE("dual of H is a triangulation and round-trips") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto h = random_cubic_planar(4 + 2 * (i % 8), rng);
        auto g = dual(h);
        CHECK(g.num_vertices() == h.num_faces());
        CHECK(g.num_edges() == h.num_edges());
        CHECK(g.num_faces() == h.num_vertices());
        auto report = validate_triangulation(g);
        CHECK(report.ok);
        auto back = dual(g);
        CHECK(back.num_vertices() == h.num_vertices());
        CHECK(back.num_faces() == h.num_faces());
        for (int e = 0; e < h.num_edges(); ++e) {
            auto a = h.ends(e), b = back.ends(e);
            CHECK(((a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0])));
        }
    }
}

TEST_CASE("dual of the tetrahedron is K4") {
    auto g = dual(k4_graph());
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 6);
    for (const auto& r : g.vertex_rotation) CHECK(r.size() == 3);
}

TEST_CASE("text and JSON round trip") {
    auto h = dodecahedron_graph();
    auto t = parse_graph(to_text(h));
    auto j = parse_graph(to_json(h));
    CHECK(to_text(t) == to_text(h));
    CHECK(to_text(j) == to_text(h));
}

TEST_CASE("external ids survive parsing") {
    const char* text =
        "cubic-planar v1\n"
        "# theta with sparse ids\n"
        "vertices 2\n"
        "edge 10 7 9\nedge 20 7 9\nedge 30 7 9\n"
        "rot 7 10 20 30\nrot 9 30 20 10\n";
    auto h = parse_graph(text);
    CHECK(h.num_vertices() == 2);
    CHECK(h.vertex_label(0) == 7);
    CHECK(h.edge_index(20) == 1);
    CHECK(h.edge_index(21) == -1);
    CHECK(h.num_faces() == 3);
}

TEST_CASE("malformed inputs are rejected by kind") {
    CHECK(kind_of("") == "malformed");
    CHECK(kind_of("cubic-planar v2\n") == "malformed");
    CHECK(kind_of("cubic-planar v1\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\nrot 0 0 1\nrot 1 2 1 0\n") == "degree");
    CHECK(kind_of("cubic-planar v1\nvertices 2\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\nrot 0 0 1 2\nrot 1 2 1 9\n") ==
          "malformed");
    CHECK(kind_of("cubic-planar v1\nvertices 3\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\nrot 0 0 1 2\nrot 1 2 1 0\n") ==
          "malformed");
    CHECK(kind_of("{\"edges\": 5}") == "malformed");
    CHECK(kind_of("{not json") == "malformed");
    // Loop at vertex 0.
    CHECK(kind_of("cubic-planar v1\nedge 0 0 0\nedge 1 0 1\nedge 2 1 1\nrot 0 0 0 1\nrot 1 1 2 2\n") == "loop");
    // Two disjoint thetas.
    CHECK(kind_of("cubic-planar v1\n"
                  "edge 0 0 1\nedge 1 0 1\nedge 2 0 1\nedge 3 2 3\nedge 4 2 3\nedge 5 2 3\n"
                  "rot 0 0 1 2\nrot 1 2 1 0\nrot 2 3 4 5\nrot 3 5 4 3\n") == "disconnected");
    // K4 with an edge missing from one rotation.
    CHECK(kind_of("cubic-planar v1\n"
                  "edge 0 0 1\nedge 1 0 2\nedge 2 0 3\nedge 3 1 2\nedge 4 2 3\nedge 5 3 1\n"
                  "rot 0 1 2 0\nrot 1 3 0 5\nrot 2 4 1 3\nrot 3 5 2 2\n") == "rotation");
}

TEST_CASE("Petersen graph is rejected as non-planar") {
    CHECK(kind_of(petersen_text()) == "euler");
}

TEST_CASE("theta with a twisted rotation is not planar") {
    // Same rotation at both ends gives one face: V - E + F = 2 - 3 + 1.
    CHECK(kind_of("cubic-planar v1\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\nrot 0 0 1 2\nrot 1 0 1 2\n") == "euler");
}

TEST_CASE("cycle traversal") {
    auto h = prism_graph(4);
    std::vector<Dart> walk;
    CHECK(cycle_traversal(h, {0, 1, 2, 3}, &walk));
    CHECK(walk.size() == 4);
    for (std::size_t i = 0; i < walk.size(); ++i) CHECK(h.head(walk[i]) == h.tail(walk[(i + 1) % walk.size()]));
    CHECK_FALSE(cycle_traversal(h, {0, 1, 2}, nullptr));
    CHECK_FALSE(cycle_traversal(h, {0, 1, 2, 3, 4, 5, 6, 7}, nullptr));
}

TEST_CASE("random generator yields valid graphs of the requested size") {
    std::mt19937_64 rng(3);
    for (int n = 4; n <= 40; n += 2) {
        auto h = random_cubic_planar(n, rng);
        CHECK(h.num_vertices() == n);
        CHECK(h.num_edges() == 3 * n / 2);
        CHECK(h.num_faces() == 2 + n / 2);
    }
}
