#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "barymorph/plane_graph.hpp"

namespace barymorph {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point p) noexcept { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point a, Point b) noexcept = default;
};

[[nodiscard]] constexpr double dot(Point a, Point b) noexcept { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double cross(Point a, Point b) noexcept { return a.x * b.y - a.y * b.x; }
/// Twice the signed area of (a, b, c); positive when counter-clockwise.
[[nodiscard]] constexpr double orient(Point a, Point b, Point c) noexcept { return cross(b - a, c - a); }
[[nodiscard]] inline double distance(Point a, Point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

/// Euclidean distance from `p` to the closed segment [a, b].
[[nodiscard]] double point_segment_distance(Point p, Point a, Point b) noexcept;

/// Geometric tolerance for orientation tests: a signed area below
/// `eps * L^2` counts as zero, L being the drawing's bounding-box extent.
struct Tolerance {
    double eps = 1e-12;

    /// Default tolerance, overridden by the BARYMORPH_EPS environment variable.
    [[nodiscard]] static Tolerance from_env();
};

/// Prescribed outer boundary. Corners are counter-clockwise.
class Triangle {
public:
    /// Throws `DegenerateTriangle` unless (p0, p1, p2) has positive signed area.
    [[nodiscard]] static Triangle make(Point p0, Point p1, Point p2);
    /// Accepts either orientation and swaps two corners if needed.
    [[nodiscard]] static Triangle from_any_orientation(Point p0, Point p1, Point p2);
    [[nodiscard]] static Triangle equilateral(double side = 1.0);

    [[nodiscard]] const std::array<Point, 3>& corners() const noexcept { return p_; }
    [[nodiscard]] Point operator[](std::size_t i) const noexcept { return p_[i]; }
    [[nodiscard]] double area() const noexcept { return 0.5 * orient(p_[0], p_[1], p_[2]); }
    [[nodiscard]] double longest_side() const noexcept;

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    explicit Triangle(std::array<Point, 3> p) : p_(p) {}
    std::array<Point, 3> p_;
};

/// Resolution of a triangle: shortest vertex-to-opposite-side distance over
/// the longest side. Never exceeds sqrt(3)/2.
[[nodiscard]] double triangle_resolution(const Triangle& t);

struct TriangleExtents {
    double x_extent = 0.0;
    double y_extent = 0.0;
    double h_over_l_min = 0.0;  // min over sides of height / side length
    double resolution = 0.0;
    bool x_bound_holds = false;       // X <= Y / r
    bool height_bound_holds = false;  // every h / l >= r
};

[[nodiscard]] TriangleExtents triangle_extent_check(const Triangle& t);

/// Vertex -> point map for a plane graph.
class Drawing {
public:
    /// Throws `DegenerateDrawing` on a size mismatch or non-finite coordinates.
    Drawing(std::shared_ptr<const PlaneGraph> graph, std::vector<Point> coords);

    [[nodiscard]] const PlaneGraph& graph() const noexcept { return *graph_; }
    [[nodiscard]] const std::shared_ptr<const PlaneGraph>& graph_ptr() const noexcept { return graph_; }
    [[nodiscard]] const std::vector<Point>& coords() const noexcept { return coords_; }
    [[nodiscard]] Point operator[](Vertex v) const { return coords_.at(v); }

    /// The outer cycle's corners, in outer-cycle order.
    [[nodiscard]] Triangle outer_triangle() const;
    /// Longest side of the outer triangle; for a planar drawing this is the
    /// largest distance between separated objects.
    [[nodiscard]] double scale() const;

private:
    std::shared_ptr<const PlaneGraph> graph_;
    std::vector<Point> coords_;
};

/// Largest coordinate-wise difference between two drawings of the same graph.
[[nodiscard]] double max_coordinate_deviation(const Drawing& a, const Drawing& b);

struct GeomObject {
    enum class Kind { vertex, edge };
    Kind kind = Kind::vertex;
    Vertex v = 0;  // when kind == vertex
    Edge e{};      // when kind == edge

    [[nodiscard]] static GeomObject of(Vertex v) noexcept { return {Kind::vertex, v, {}}; }
    [[nodiscard]] static GeomObject of(Edge e) noexcept { return {Kind::edge, 0, e}; }
    [[nodiscard]] std::string str() const;
    friend bool operator==(const GeomObject&, const GeomObject&) = default;
};

struct SeparatedPair {
    GeomObject first;
    GeomObject second;
    double distance = 0.0;
};

struct ResolutionReport {
    double min_dist = 0.0;
    double max_dist = 0.0;
    double resolution = 0.0;
    SeparatedPair min_witness;
    SeparatedPair max_witness;

    [[nodiscard]] double log_resolution() const { return std::log(min_dist) - std::log(max_dist); }
};

struct SeparationOptions {
    /// Distinct vertices always count as separated; clearing this excludes
    /// pairs joined by an edge, for sensitivity checks.
    bool include_adjacent_vertex_pairs = true;
};

/// Brute-force min/max distance over every separated pair. Throws
/// `DegenerateDrawing` when the minimum is zero.
[[nodiscard]] ResolutionReport separated_object_extremes(const Drawing& d, SeparationOptions opts = {});

/// Every pair of separated objects at exactly `dist`. Used to make witness
/// comparisons tie-aware.
[[nodiscard]] std::vector<SeparatedPair> separated_pairs_at(const Drawing& d, double dist,
                                                            SeparationOptions opts = {});

struct FaceWitness {
    Vertex vertex = 0;
    Edge edge{};
    Face face{};
    double distance = 0.0;
};

/// Minimum over (vertex, opposite edge) pairs of internal faces, restricted to
/// a pair whose altitude foot falls inside the edge. For a planar drawing of a
/// maximal plane graph this equals the global minimum separated distance.
/// Throws `WitnessNotFound` when no minimizing pair has an interior altitude.
[[nodiscard]] FaceWitness min_distance_internal_face_witness(const Drawing& d);

struct PlanarityViolation {
    enum class Kind {
        non_finite,
        vertex_coincidence,
        vertex_on_edge,
        edge_crossing,
        edge_overlap,
        face_orientation,
        outer_orientation,
        rotation_mismatch,
    };
    Kind kind;
    std::string detail;
};

struct PlanarityReport {
    std::vector<PlanarityViolation> violations;

    [[nodiscard]] bool planar() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return planar(); }
    [[nodiscard]] std::string summary(std::size_t max_items = 5) const;
};

/// Planarity of the straight-line drawing together with agreement of the
/// drawn embedding with the graph's rotation system and outer cycle.
[[nodiscard]] PlanarityReport verify_planar_straight_line(const Drawing& d, Tolerance tol = Tolerance::from_env());

/// Rotation about the origin by `angle`, then translation by `shift`.
[[nodiscard]] Drawing apply_rigid_transform(const Drawing& d, double angle, Point shift);
[[nodiscard]] Triangle apply_rigid_transform(const Triangle& t, double angle, Point shift);
[[nodiscard]] Drawing apply_uniform_scale(const Drawing& d, double s);

/// Linear interpolation (1 - s) a + s b of two drawings of the same graph.
[[nodiscard]] Drawing lerp(const Drawing& a, const Drawing& b, double s);

[[nodiscard]] double face_area(const Drawing& d, const Face& f);

}  // namespace barymorph
