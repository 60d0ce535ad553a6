#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "barymorph/embedder.hpp"
#include "barymorph/error.hpp"
#include "barymorph/families.hpp"
#include "barymorph/geometry.hpp"
#include "testkit.hpp"

using namespace barymorph;
using doctest::Approx;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Drawing k4_tutte() { return t_drawing(testkit::k4(), testkit::unit_equilateral()); }

bool has_kind(const PlanarityReport& r, PlanarityViolation::Kind k) {
    for (const auto& v : r.violations)
        if (v.kind == k) return true;
    return false;
}

}  // namespace

TEST_SUITE("geometry") {
    TEST_CASE("point_segment_distance") {
        CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) == 1.0);
        CHECK(point_segment_distance({2, 1}, {-1, 0}, {1, 0}) == Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(point_segment_distance({0.25, 0}, {-1, 0}, {1, 0}) == 0.0);
        CHECK(point_segment_distance({-1, 0}, {-1, 0}, {1, 0}) == 0.0);
    }

    TEST_CASE("K4 Tutte drawing extremes") {
        const Drawing d = k4_tutte();
        const auto rep = separated_object_extremes(d);
        CHECK(rep.min_dist == Approx(kSqrt3 / 6).epsilon(1e-14));
        CHECK(rep.max_dist == Approx(1.0).epsilon(1e-15));
        CHECK(rep.resolution == Approx(kSqrt3 / 6).epsilon(1e-14));
        CHECK(rep.min_dist == Approx(testkit::oracle_min_separated_distance(d)).epsilon(1e-15));
        // Center against an outer edge; the non-adjacent edge pair (3, i)-(j, k) meets at the same value.
        const auto ties = separated_pairs_at(d, rep.min_dist);
        bool vertex_edge = false, edge_edge = false;
        for (const auto& p : ties) {
            vertex_edge |= p.first.kind != p.second.kind;
            edge_edge |= p.first.kind == GeomObject::Kind::edge && p.second.kind == GeomObject::Kind::edge;
        }
        CHECK(vertex_edge);
        CHECK(edge_edge);
    }

    TEST_CASE("excluding adjacent vertex pairs can only raise the minimum") {
        for (const auto& item : testkit::corpus()) {
            const auto all = separated_object_extremes(item.drawing);
            SeparationOptions opts;
            opts.include_adjacent_vertex_pairs = false;
            const auto strict = separated_object_extremes(item.drawing, opts);
            CHECK(strict.min_dist >= all.min_dist);
        }
    }

    TEST_CASE("uniform scaling keeps the resolution") {
        const Drawing d = k4_tutte();
        const auto a = separated_object_extremes(d);
        const auto b = separated_object_extremes(apply_uniform_scale(d, 7.5));
        CHECK(b.resolution == Approx(a.resolution).epsilon(1e-12));
        CHECK(b.min_dist == Approx(7.5 * a.min_dist).epsilon(1e-12));
    }

    TEST_CASE("Eades-Garvan n = 7 extremes") {
        using I = EadesGarvanInstance;
        const double r = kSqrt3 / 2;
        const auto eg = eades_garvan(7, 0.25, r);
        const Drawing d = f_drawing(eg.matrix, eg.outer);
        const auto x = eg_chain_oracle(7, 0.25, r);
        const auto rep = separated_object_extremes(d);
        CHECK(rep.max_dist == Approx(1.0).epsilon(1e-15));
        // The closest separated pair is the last chain vertex and the edge (u, v).
        CHECK(rep.min_dist == Approx(x[3]).epsilon(1e-12));
        CHECK(rep.min_witness.first == GeomObject::of(I::chain(4)));
        CHECK(rep.min_witness.second == GeomObject::of(Edge::make(I::u, I::v)));
        const auto w = min_distance_internal_face_witness(d);
        CHECK(w.vertex == I::chain(4));
        CHECK(w.edge == Edge::make(I::u, I::v));
        CHECK(w.distance == rep.min_dist);
    }

    TEST_CASE("K4 face witness") {
        const auto w = min_distance_internal_face_witness(k4_tutte());
        CHECK(w.vertex == 3);
        CHECK(w.distance == Approx(kSqrt3 / 6).epsilon(1e-14));
    }

    TEST_CASE("planarity verification") {
        SUBCASE("K4 Tutte drawing") { CHECK(verify_planar_straight_line(k4_tutte()).planar()); }
        SUBCASE("center moved outside") {
            std::vector<Point> p = k4_tutte().coords();
            p[3] = {0.5, -0.4};
            const auto rep = verify_planar_straight_line(Drawing(testkit::k4(), p));
            CHECK_FALSE(rep.planar());
            CHECK(has_kind(rep, PlanarityViolation::Kind::edge_crossing));
        }
        SUBCASE("center on an outer edge") {
            std::vector<Point> p = k4_tutte().coords();
            p[3] = {0.5, 0.0};
            const auto rep = verify_planar_straight_line(Drawing(testkit::k4(), p));
            CHECK(has_kind(rep, PlanarityViolation::Kind::vertex_on_edge));
        }
        SUBCASE("coincident vertices") {
            std::vector<Point> p = k4_tutte().coords();
            p[3] = p[0];
            CHECK(has_kind(verify_planar_straight_line(Drawing(testkit::k4(), p)),
                           PlanarityViolation::Kind::vertex_coincidence));
        }
        SUBCASE("mirrored drawing disagrees with the embedding") {
            std::vector<Point> p = k4_tutte().coords();
            for (auto& q : p) q.x = -q.x;
            const auto rep = verify_planar_straight_line(Drawing(testkit::k4(), p));
            CHECK_FALSE(rep.planar());
            CHECK(has_kind(rep, PlanarityViolation::Kind::face_orientation));
        }
        SUBCASE("nested triangles n = 12") {
            const auto nt = nested_triangles(12);
            CHECK(verify_planar_straight_line(nt.gamma0).planar());
            CHECK(verify_planar_straight_line(nt.gamma1).planar());
        }
        SUBCASE("collinear but disjoint chain edges are fine") {
            const auto eg = eades_garvan(12, 0.25, 0.5);
            CHECK(verify_planar_straight_line(f_drawing(eg.matrix, eg.outer)).planar());
        }
        SUBCASE("non-finite coordinates are rejected at construction") {
            std::vector<Point> p = k4_tutte().coords();
            p[3].x = std::nan("");
            CHECK_THROWS_AS(Drawing(testkit::k4(), p), Error);
        }
    }

    TEST_CASE("rigid transforms") {
        const Drawing d = k4_tutte();
        CHECK(max_coordinate_deviation(apply_rigid_transform(d, 0.0, {0, 0}), d) == 0.0);
        const Drawing twice = apply_rigid_transform(apply_rigid_transform(d, std::numbers::pi, {0, 0}), std::numbers::pi, {0, 0});
        CHECK(max_coordinate_deviation(twice, d) <= 1e-12);

        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi), shift(-10, 10);
        for (const auto& item : testkit::corpus()) {
            const Drawing moved = apply_rigid_transform(item.drawing, angle(rng), {shift(rng), shift(rng)});
            const double a = separated_object_extremes(item.drawing).resolution;
            const double b = separated_object_extremes(moved).resolution;
            CHECK(std::abs(a - b) <= 1e-9 * a);
        }
    }

    TEST_CASE("triangle resolution") {
        CHECK(triangle_resolution(testkit::unit_equilateral()) == Approx(kSqrt3 / 2).epsilon(1e-15));
        CHECK(triangle_resolution(Triangle::make({0, 0}, {1, 0}, {0, 1})) == Approx(0.5).epsilon(1e-15));
        for (double r : {0.05, 0.25, 0.5, 0.8, kSqrt3 / 2})
            CHECK(triangle_resolution(Triangle::make({0, 0.5}, {0, -0.5}, {r, 0})) == Approx(r).epsilon(1e-12));
        CHECK_THROWS_AS((void)Triangle::make({0, 0}, {0, 1}, {1, 0}), Error);
        CHECK_THROWS_AS((void)Triangle::make({0, 0}, {1, 1}, {2, 2}), Error);
        const auto flipped = Triangle::from_any_orientation({0, 0}, {0, 1}, {1, 0});
        CHECK(flipped.area() > 0.0);
    }

    TEST_CASE("triangle extents") {
        SUBCASE("equilateral") {
            const auto e = triangle_extent_check(testkit::unit_equilateral());
            CHECK(e.x_extent == Approx(1.0));
            CHECK(e.y_extent == Approx(kSqrt3 / 2));
            CHECK(e.x_bound_holds);
            CHECK(e.height_bound_holds);
        }
        SUBCASE("thin chain triangle") {
            const auto e = triangle_extent_check(Triangle::make({0, 0.5}, {0, -0.5}, {0.25, 0}));
            CHECK(e.y_extent == 1.0);
            CHECK(e.x_extent == 0.25);
            CHECK(e.x_bound_holds);
            CHECK(e.height_bound_holds);
        }
    }
}
