#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace barymorph {

using Vertex = std::uint32_t;

/// Vertex triple of a triangular face. Internal faces are stored
/// counter-clockwise; the outer cycle is stored counter-clockwise as the
/// boundary of the drawing (so the outer face itself traces it reversed).
using Face = std::array<Vertex, 3>;

/// Undirected edge with `a < b`.
struct Edge {
    Vertex a{};
    Vertex b{};

    [[nodiscard]] static constexpr Edge make(Vertex u, Vertex v) noexcept {
        return u < v ? Edge{u, v} : Edge{v, u};
    }
    [[nodiscard]] constexpr bool incident(Vertex v) const noexcept { return a == v || b == v; }
    [[nodiscard]] constexpr bool shares_endpoint(const Edge& o) const noexcept {
        return incident(o.a) || incident(o.b);
    }
    constexpr auto operator<=>(const Edge&) const noexcept = default;
};

struct VertexClass {
    std::vector<Vertex> internal;
    std::vector<Vertex> external;
};

/// Maximal plane graph given by its triangular faces. Immutable once built;
/// the rotation system and the edge set are derived from the faces.
class PlaneGraph {
public:
    /// Validates every combinatorial invariant and throws `Error` naming the
    /// first one violated.
    [[nodiscard]] static PlaneGraph build(std::size_t vertex_count, std::span<const Face> faces,
                                          const Face& outer_cycle);
    /// Same, with the vertex count taken as the largest referenced id plus one.
    [[nodiscard]] static PlaneGraph build(std::span<const Face> faces, const Face& outer_cycle);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return rotation_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::size_t internal_count() const noexcept { return vertex_count() - 3; }

    [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }
    [[nodiscard]] const Face& outer_cycle() const noexcept { return outer_; }
    /// Sorted lexicographically.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] bool contains(Vertex v) const noexcept { return v < vertex_count(); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] std::size_t degree(Vertex v) const;
    [[nodiscard]] bool is_external(Vertex v) const;
    /// Position of `v` within the outer cycle, or -1 when internal.
    [[nodiscard]] int outer_position(Vertex v) const;

    /// Counter-clockwise cyclic neighbor order, starting at the smallest id.
    [[nodiscard]] std::span<const Vertex> neighbors_ccw(Vertex v) const;
    /// Clockwise cyclic neighbor order, starting at the smallest id.
    [[nodiscard]] std::vector<Vertex> neighbors_cw(Vertex v) const;

    [[nodiscard]] std::vector<Vertex> internal_vertices() const;

    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
        return a.faces_ == b.faces_ && a.outer_ == b.outer_ && a.rotation_.size() == b.rotation_.size();
    }

private:
    PlaneGraph() = default;

    std::vector<Face> faces_;
    Face outer_{};
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> rotation_;  // ccw
    std::vector<std::vector<Vertex>> sorted_neighbors_;
};

[[nodiscard]] VertexClass classify_vertices(const PlaneGraph& g);

/// Throws `UnknownVertex` for ids outside the graph.
[[nodiscard]] std::vector<Vertex> neighbors_cw(const PlaneGraph& g, Vertex v);

/// Subgraph lying inside or on a cycle of the graph, with the two structural
/// properties every such subgraph of a maximal plane graph must have.
struct InsideCycleReport {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    bool biconnected = false;
    bool internally_triangulated = false;

    [[nodiscard]] bool ok() const noexcept { return biconnected && internally_triangulated; }
};

/// `cycle` is a simple cycle given as a vertex sequence (either direction).
/// Throws `NonSimple` when it is not a simple cycle of `g`.
[[nodiscard]] InsideCycleReport subgraph_inside_cycle(const PlaneGraph& g, std::span<const Vertex> cycle);

}  // namespace barymorph
