#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclecount {

// Raised for malformed or non-cubic-planar input. `kind` is one of
// "malformed", "degree", "loop", "disconnected", "euler", "rotation",
// "constraint"; `offending` is the external id at fault (or -1).
class GraphError : public std::runtime_error {
public:
    GraphError(std::string kind, std::int64_t offending, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)), offending_(offending) {}
    const std::string& kind() const { return kind_; }
    std::int64_t offending() const { return offending_; }

private:
    std::string kind_;
    std::int64_t offending_;
};

// Directed traversal of an edge. side 0 runs ends[0] -> ends[1].
struct Dart {
    int edge = -1;
    int side = 0;
    auto operator<=>(const Dart&) const = default;
};

// A directed edge (tail -> head) of a cubic graph. Parallel edges make the
// endpoints alone ambiguous, so the edge index is part of the arc.
struct Arc {
    int edge = -1;
    int tail = -1;
    int head = -1;
    Arc reversed() const { return {edge, head, tail}; }
    auto operator<=>(const Arc&) const = default;
};
using ArcSequence = std::vector<Arc>;

// Connected 3-regular plane multigraph without loops, given by a rotation
// system. Vertices and edges are dense indices; the external ids from the
// input file are kept as labels.
class CubicPlanarGraph {
public:
    CubicPlanarGraph() = default;

    // Validates degree, loops, rotation consistency, connectivity and Euler's
    // formula. Labels default to the dense indices.
    static CubicPlanarGraph from_rotation(std::vector<std::array<int, 2>> ends,
                                          std::vector<std::array<int, 3>> rotation,
                                          std::vector<std::int64_t> vertex_labels = {},
                                          std::vector<std::int64_t> edge_labels = {});

    int num_vertices() const { return static_cast<int>(rotation_.size()); }
    int num_edges() const { return static_cast<int>(ends_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    const std::array<int, 2>& ends(int e) const { return ends_[e]; }
    const std::array<int, 3>& rotation(int v) const { return rotation_[v]; }
    int other_end(int e, int v) const { return ends_[e][0] == v ? ends_[e][1] : ends_[e][0]; }

    int tail(Dart d) const { return ends_[d.edge][d.side]; }
    int head(Dart d) const { return ends_[d.edge][1 - d.side]; }
    Dart dart_from(int e, int v) const { return {e, ends_[e][0] == v ? 0 : 1}; }
    Dart next_in_face(Dart d) const;

    // Faces as cyclic dart sequences; face_of(e, side) is the face traced by
    // that dart.
    const std::vector<std::vector<Dart>>& faces() const { return faces_; }
    int face_of(Dart d) const { return dart_face_[2 * d.edge + d.side]; }

    std::int64_t vertex_label(int v) const { return vertex_labels_[v]; }
    std::int64_t edge_label(int e) const { return edge_labels_[e]; }
    const std::vector<std::int64_t>& vertex_labels() const { return vertex_labels_; }
    const std::vector<std::int64_t>& edge_labels() const { return edge_labels_; }
    // Dense index for an external id, or -1.
    int vertex_index(std::int64_t label) const;
    int edge_index(std::int64_t label) const;

private:
    std::vector<std::array<int, 2>> ends_;
    std::vector<std::array<int, 3>> rotation_;
    std::vector<std::vector<Dart>> faces_;
    std::vector<int> dart_face_;
    std::vector<std::int64_t> vertex_labels_;
    std::vector<std::int64_t> edge_labels_;
};

// Plane triangulation dual to a cubic graph: one vertex per face of H, one
// edge per edge of H (same index), one triangle per vertex of H.
struct PlanarTriangulation {
    // Cyclic edge order around each vertex (the boundary walk of the H face).
    std::vector<std::vector<int>> vertex_rotation;
    // Endpoints per edge: the faces of H on side 0 and side 1 of the dart.
    std::vector<std::array<int, 2>> edge_ends;
    // Triangles as ordered edge triples, in the rotation order of the H vertex.
    std::vector<std::array<int, 3>> faces;

    int num_vertices() const { return static_cast<int>(vertex_rotation.size()); }
    int num_edges() const { return static_cast<int>(edge_ends.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }
};

PlanarTriangulation dual(const CubicPlanarGraph& h);
CubicPlanarGraph dual(const PlanarTriangulation& g);

struct TriangulationReport {
    bool ok = true;
    std::vector<std::string> problems;
};
TriangulationReport validate_triangulation(const PlanarTriangulation& g);

// Whether `edges` (dense indices) forms one simple cycle; on success fills a
// traversal as darts in cycle order.
bool cycle_traversal(const CubicPlanarGraph& h, const std::vector<int>& edges, std::vector<Dart>* out);

}  // namespace cyclecount
