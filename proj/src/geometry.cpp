#include "barymorph/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "barymorph/error.hpp"

namespace barymorph {

double point_segment_distance(Point p, Point a, Point b) noexcept {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    const double t = dot(p - a, ab) / len2;
    // Endpoint cases are returned through the vertex-vertex formula so that
    // both routes produce bit-identical values.
    if (t <= 0.0) return distance(p, a);
    if (t >= 1.0) return distance(p, b);
    return distance(p, a + t * ab);
}

Tolerance Tolerance::from_env() {
    Tolerance tol;
    if (const char* s = std::getenv("BARYMORPH_EPS")) {
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end != s && std::isfinite(v) && v >= 0.0) tol.eps = v;
    }
    return tol;
}

// ---------------------------------------------------------------------------
// Triangle
// ---------------------------------------------------------------------------

Triangle Triangle::make(Point p0, Point p1, Point p2) {
    for (Point p : {p0, p1, p2})
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error(ErrorKind::DegenerateTriangle, "non-finite corner");
    if (!(orient(p0, p1, p2) > 0.0))
        throw Error(ErrorKind::DegenerateTriangle,
                    fmt::format("corners ({}, {}), ({}, {}), ({}, {}) are not counter-clockwise", p0.x, p0.y,
                                p1.x, p1.y, p2.x, p2.y));
    return Triangle({p0, p1, p2});
}

Triangle Triangle::from_any_orientation(Point p0, Point p1, Point p2) {
    if (orient(p0, p1, p2) < 0.0) std::swap(p1, p2);
    return make(p0, p1, p2);
}

Triangle Triangle::equilateral(double side) {
    return make({0.0, 0.0}, {side, 0.0}, {0.5 * side, side * std::sqrt(3.0) / 2.0});
}

double Triangle::longest_side() const noexcept {
    return std::max({distance(p_[0], p_[1]), distance(p_[1], p_[2]), distance(p_[2], p_[0])});
}

double triangle_resolution(const Triangle& t) {
    if (!(t.area() > 0.0)) throw Error(ErrorKind::DegenerateTriangle, "zero area");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Point p = t[i], a = t[(i + 1) % 3], b = t[(i + 2) % 3];
        const double vv = distance(p, a);
        const double ve = point_segment_distance(p, a, b);
        lo = std::min({lo, vv, ve});
        hi = std::max({hi, vv, ve});
    }
    return lo / hi;
}

TriangleExtents triangle_extent_check(const Triangle& t) {
    TriangleExtents out;
    out.resolution = triangle_resolution(t);
    const auto& c = t.corners();
    auto [xmin, xmax] = std::minmax({c[0].x, c[1].x, c[2].x});
    auto [ymin, ymax] = std::minmax({c[0].y, c[1].y, c[2].y});
    out.x_extent = xmax - xmin;
    out.y_extent = ymax - ymin;
    const double twice_area = 2.0 * t.area();
    out.h_over_l_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        const double l = distance(c[i], c[(i + 1) % 3]);
        out.h_over_l_min = std::min(out.h_over_l_min, twice_area / (l * l));
    }
    out.x_bound_holds = out.x_extent <= out.y_extent / out.resolution + 1e-12;
    out.height_bound_holds = out.h_over_l_min >= out.resolution - 1e-12;
    return out;
}

// ---------------------------------------------------------------------------
// Drawing
// ---------------------------------------------------------------------------

Drawing::Drawing(std::shared_ptr<const PlaneGraph> graph, std::vector<Point> coords)
    : graph_(std::move(graph)), coords_(std::move(coords)) {
    if (!graph_) throw Error(ErrorKind::DegenerateDrawing, "drawing without a graph");
    if (coords_.size() != graph_->vertex_count())
        throw Error(ErrorKind::DegenerateDrawing,
                    fmt::format("{} coordinates for {} vertices", coords_.size(), graph_->vertex_count()));
    for (std::size_t v = 0; v < coords_.size(); ++v)
        if (!std::isfinite(coords_[v].x) || !std::isfinite(coords_[v].y))
            throw Error(ErrorKind::DegenerateDrawing, fmt::format("vertex {} has non-finite coordinates", v));
}

Triangle Drawing::outer_triangle() const {
    const auto& o = graph_->outer_cycle();
    return Triangle::make(coords_[o[0]], coords_[o[1]], coords_[o[2]]);
}

double Drawing::scale() const {
    const auto& o = graph_->outer_cycle();
    const Point a = coords_[o[0]], b = coords_[o[1]], c = coords_[o[2]];
    return std::max({distance(a, b), distance(b, c), distance(c, a)});
}

double max_coordinate_deviation(const Drawing& a, const Drawing& b) {
    if (a.coords().size() != b.coords().size())
        throw Error(ErrorKind::GraphMismatch, "drawings of different graphs");
    double dev = 0.0;
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        dev = std::max(dev, std::abs(a.coords()[i].x - b.coords()[i].x));
        dev = std::max(dev, std::abs(a.coords()[i].y - b.coords()[i].y));
    }
    return dev;
}

std::string GeomObject::str() const {
    if (kind == Kind::vertex) return fmt::format("vertex {}", v);
    return fmt::format("edge ({}, {})", e.a, e.b);
}

// ---------------------------------------------------------------------------
// Separated objects
// ---------------------------------------------------------------------------

namespace {

bool segments_cross_exact(Point a, Point b, Point c, Point d) {
    const double o1 = orient(a, b, c), o2 = orient(a, b, d);
    const double o3 = orient(c, d, a), o4 = orient(c, d, b);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

double edge_edge_distance(const std::vector<Point>& p, Edge e, Edge f) {
    if (segments_cross_exact(p[e.a], p[e.b], p[f.a], p[f.b])) return 0.0;
    return std::min({point_segment_distance(p[e.a], p[f.a], p[f.b]),
                     point_segment_distance(p[e.b], p[f.a], p[f.b]),
                     point_segment_distance(p[f.a], p[e.a], p[e.b]),
                     point_segment_distance(p[f.b], p[e.a], p[e.b])});
}

// Visits every separated pair once, in a fixed order.
template <typename Visit>
void for_each_separated_pair(const Drawing& d, SeparationOptions opts, Visit&& visit) {
    const auto& g = d.graph();
    const auto& p = d.coords();
    const auto n = static_cast<Vertex>(g.vertex_count());
    const auto& edges = g.edges();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!opts.include_adjacent_vertex_pairs && g.adjacent(u, v)) continue;
            visit(GeomObject::of(u), GeomObject::of(v), distance(p[u], p[v]));
        }
    for (Vertex u = 0; u < n; ++u)
        for (const Edge& e : edges)
            if (!e.incident(u)) visit(GeomObject::of(u), GeomObject::of(e), point_segment_distance(p[u], p[e.a], p[e.b]));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!edges[i].shares_endpoint(edges[j]))
                visit(GeomObject::of(edges[i]), GeomObject::of(edges[j]), edge_edge_distance(p, edges[i], edges[j]));
}

}  // namespace

ResolutionReport separated_object_extremes(const Drawing& d, SeparationOptions opts) {
    ResolutionReport rep;
    rep.min_dist = std::numeric_limits<double>::infinity();
    rep.max_dist = -1.0;
    for_each_separated_pair(d, opts, [&](const GeomObject& a, const GeomObject& b, double dist) {
        if (dist < rep.min_dist) {
            rep.min_dist = dist;
            rep.min_witness = {a, b, dist};
        }
        if (dist > rep.max_dist) {
            rep.max_dist = dist;
            rep.max_witness = {a, b, dist};
        }
    });
    if (!(rep.min_dist > 0.0))
        throw Error(ErrorKind::DegenerateDrawing,
                    fmt::format("{} and {} touch", rep.min_witness.first.str(), rep.min_witness.second.str()));
    rep.resolution = rep.min_dist / rep.max_dist;
    return rep;
}

std::vector<SeparatedPair> separated_pairs_at(const Drawing& d, double dist, SeparationOptions opts) {
    std::vector<SeparatedPair> out;
    for_each_separated_pair(d, opts, [&](const GeomObject& a, const GeomObject& b, double x) {
        if (x == dist) out.push_back({a, b, x});
    });
    return out;
}

FaceWitness min_distance_internal_face_witness(const Drawing& d) {
    const auto& p = d.coords();
    double best = std::numeric_limits<double>::infinity();
    for (const Face& f : d.graph().faces())
        for (int i = 0; i < 3; ++i) {
            const Edge e = Edge::make(f[(i + 1) % 3], f[(i + 2) % 3]);
            best = std::min(best, point_segment_distance(p[f[i]], p[e.a], p[e.b]));
        }
    // Among the minimizers, pick one whose altitude foot is interior.
    for (const Face& f : d.graph().faces())
        for (int i = 0; i < 3; ++i) {
            const Edge e = Edge::make(f[(i + 1) % 3], f[(i + 2) % 3]);
            const Point v = p[f[i]], a = p[e.a], b = p[e.b];
            if (point_segment_distance(v, a, b) != best) continue;
            const Point ab = b - a;
            const double t = dot(v - a, ab) / dot(ab, ab);
            if (t > 0.0 && t < 1.0) return {f[i], e, f, best};
        }
    throw Error(ErrorKind::WitnessNotFound,
                "no internal face attains the minimum with an interior altitude; drawing is not planar");
}

// ---------------------------------------------------------------------------
// Planarity
// ---------------------------------------------------------------------------

std::string PlanarityReport::summary(std::size_t max_items) const {
    if (violations.empty()) return "planar";
    std::string s = fmt::format("{} violation(s)", violations.size());
    for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) s += "; " + violations[i].detail;
    return s;
}

PlanarityReport verify_planar_straight_line(const Drawing& d, Tolerance tol) {
    using K = PlanarityViolation::Kind;
    PlanarityReport rep;
    const auto& g = d.graph();
    const auto& p = d.coords();
    const auto n = static_cast<Vertex>(g.vertex_count());
    const auto& edges = g.edges();

    for (Vertex v = 0; v < n; ++v)
        if (!std::isfinite(p[v].x) || !std::isfinite(p[v].y))
            rep.violations.push_back({K::non_finite, fmt::format("vertex {} is not finite", v)});
    if (!rep.planar()) return rep;

    double xmin = p[0].x, xmax = p[0].x, ymin = p[0].y, ymax = p[0].y;
    for (const auto& q : p) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    const double extent = std::max({xmax - xmin, ymax - ymin, std::numeric_limits<double>::min()});
    const double area_eps = tol.eps * extent * extent;
    const double len_eps = tol.eps * extent;
    auto sign = [area_eps](double o) { return o > area_eps ? 1 : (o < -area_eps ? -1 : 0); };

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (distance(p[u], p[v]) <= len_eps)
                rep.violations.push_back({K::vertex_coincidence, fmt::format("vertices {} and {} coincide", u, v)});

    // A vertex on the closed extent of a non-incident edge.
    for (Vertex v = 0; v < n; ++v)
        for (const Edge& e : edges) {
            if (e.incident(v)) continue;
            const Point a = p[e.a], b = p[e.b];
            if (sign(orient(a, b, p[v])) != 0) continue;
            const double t = dot(p[v] - a, b - a);
            if (t >= 0.0 && t <= dot(b - a, b - a))
                rep.violations.push_back(
                    {K::vertex_on_edge, fmt::format("vertex {} lies on edge ({}, {})", v, e.a, e.b)});
        }

    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge e = edges[i], f = edges[j];
            if (e.shares_endpoint(f)) continue;
            const Point a = p[e.a], b = p[e.b], c = p[f.a], dd = p[f.b];
            const int o1 = sign(orient(a, b, c)), o2 = sign(orient(a, b, dd));
            const int o3 = sign(orient(c, dd, a)), o4 = sign(orient(c, dd, b));
            if (o1 * o2 < 0 && o3 * o4 < 0) {
                rep.violations.push_back({K::edge_crossing, fmt::format("edges ({}, {}) and ({}, {}) cross", e.a,
                                                                        e.b, f.a, f.b)});
            } else if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
                // Collinear: compare extents along the segment direction.
                const Point dir = b - a;
                auto [lo1, hi1] = std::minmax({dot(a, dir), dot(b, dir)});
                auto [lo2, hi2] = std::minmax({dot(c, dir), dot(dd, dir)});
                if (lo1 <= hi2 && lo2 <= hi1)
                    rep.violations.push_back({K::edge_overlap, fmt::format("edges ({}, {}) and ({}, {}) overlap",
                                                                           e.a, e.b, f.a, f.b)});
            }
        }

    for (const Face& f : g.faces())
        if (sign(orient(p[f[0]], p[f[1]], p[f[2]])) <= 0)
            rep.violations.push_back({K::face_orientation, fmt::format("face ({}, {}, {}) is not counter-clockwise",
                                                                       f[0], f[1], f[2])});
    {
        const Face& o = g.outer_cycle();
        if (sign(orient(p[o[0]], p[o[1]], p[o[2]])) <= 0)
            rep.violations.push_back({K::outer_orientation, "outer cycle is not counter-clockwise"});
    }

    // Angular order of neighbors around each vertex must match the rotation.
    for (Vertex v = 0; v < n; ++v) {
        const auto rot = g.neighbors_ccw(v);
        std::vector<std::pair<double, Vertex>> by_angle;
        by_angle.reserve(rot.size());
        for (Vertex u : rot) by_angle.emplace_back(std::atan2(p[u].y - p[v].y, p[u].x - p[v].x), u);
        std::sort(by_angle.begin(), by_angle.end());
        const std::size_t deg = by_angle.size();
        bool ok = true;
        for (std::size_t k = 0; k < deg && ok; ++k) {
            const Point a = p[by_angle[k].second] - p[v];
            const Point b = p[by_angle[(k + 1) % deg].second] - p[v];
            if (std::abs(cross(a, b)) <= area_eps && dot(a, b) > 0.0) ok = false;
        }
        if (ok) {
            const auto start = static_cast<std::size_t>(
                std::find_if(by_angle.begin(), by_angle.end(), [&](const auto& x) { return x.second == rot[0]; }) -
                by_angle.begin());
            for (std::size_t k = 0; k < deg && ok; ++k)
                if (by_angle[(start + k) % deg].second != rot[k]) ok = false;
        }
        if (!ok)
            rep.violations.push_back({K::rotation_mismatch,
                                      fmt::format("edges around vertex {} are not in the embedding's order", v)});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

namespace {

Point rigid(Point q, double c, double s, Point shift) {
    return {q.x * c - q.y * s + shift.x, q.x * s + q.y * c + shift.y};
}

}  // namespace

Drawing apply_rigid_transform(const Drawing& d, double angle, Point shift) {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Point> out;
    out.reserve(d.coords().size());
    for (Point q : d.coords()) out.push_back(rigid(q, c, s, shift));
    return Drawing(d.graph_ptr(), std::move(out));
}

Triangle apply_rigid_transform(const Triangle& t, double angle, Point shift) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Triangle::make(rigid(t[0], c, s, shift), rigid(t[1], c, s, shift), rigid(t[2], c, s, shift));
}

Drawing apply_uniform_scale(const Drawing& d, double s) {
    std::vector<Point> out;
    out.reserve(d.coords().size());
    for (Point q : d.coords()) out.push_back(s * q);
    return Drawing(d.graph_ptr(), std::move(out));
}

Drawing lerp(const Drawing& a, const Drawing& b, double s) {
    if (a.coords().size() != b.coords().size()) throw Error(ErrorKind::GraphMismatch, "drawings of different graphs");
    std::vector<Point> out(a.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (1.0 - s) * a.coords()[i] + s * b.coords()[i];
    return Drawing(a.graph_ptr(), std::move(out));
}

double face_area(const Drawing& d, const Face& f) { return 0.5 * orient(d[f[0]], d[f[1]], d[f[2]]); }

}  // namespace barymorph
