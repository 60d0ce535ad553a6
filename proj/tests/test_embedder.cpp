#include <doctest.h>

#include <cmath>
#include <random>

#include "barymorph/embedder.hpp"
#include "barymorph/error.hpp"
#include "barymorph/families.hpp"
#include "testkit.hpp"

using namespace barymorph;
using doctest::Approx;

TEST_SUITE("embedder") {
    TEST_CASE("system assembly") {
        SUBCASE("K4: a 1x1 system") {
            const auto sys = assemble_system(uniform_coefficients(testkit::k4()), testkit::unit_equilateral());
            REQUIRE(sys.matrix.rows() == 1);
            CHECK(sys.matrix.coeff(0, 0) == 1.0);
            CHECK(sys.rhs_x[0] == Approx((0.0 + 1.0 + 0.5) / 3));
        }
        SUBCASE("Eades-Garvan n = 7: tridiagonal chain block") {
            using I = EadesGarvanInstance;
            const auto eg = eades_garvan(7, 0.25, 0.5);
            const auto sys = assemble_system(eg.matrix, eg.outer);
            REQUIRE(sys.matrix.rows() == 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    const double a = sys.matrix.coeff(sys.row_of[I::chain(i + 1)], sys.row_of[I::chain(j + 1)]);
                    if (i == j)
                        CHECK(a == 1.0);
                    else if (std::abs(i - j) == 1)
                        CHECK(a == -0.25);
                    else
                        CHECK(a == 0.0);
                }
        }
        SUBCASE("row sums equal the external mass") {
            std::mt19937_64 rng(8);
            const auto g = random_stacked_triangulation(30, rng);
            const auto m = random_coefficients(g, rng);
            const auto sys = assemble_system(m, testkit::unit_equilateral());
            for (std::size_t r = 0; r < sys.unknowns.size(); ++r) {
                double row = 0.0;
                for (std::size_t c = 0; c < sys.unknowns.size(); ++c)
                    row += sys.matrix.coeff(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                double external = 0.0;
                for (const auto& e : m.row(sys.unknowns[r]))
                    if (g->is_external(e.u)) external += e.weight;
                CHECK(std::abs(row - external) <= 1e-14);
            }
        }
        SUBCASE("invalid coefficients are refused") {
            auto m = uniform_coefficients(testkit::k4());
            m.set(3, 0, 0.1);
            CHECK_THROWS_AS((void)assemble_system(m, testkit::unit_equilateral()), Error);
        }
    }

    TEST_CASE("F-drawings against the dense oracle") {
        SUBCASE("K4 barycenter") {
            const Drawing d = t_drawing(testkit::k4(), testkit::unit_equilateral());
            CHECK(d[3].x == Approx(0.5).epsilon(1e-15));
            CHECK(d[3].y == Approx(std::sqrt(3.0) / 6).epsilon(1e-15));
        }
        SUBCASE("Eades-Garvan with r = 1") {
            // Matrix from the generator, outer triangle (0, 0.5), (0, -0.5), (1, 0).
            using I = EadesGarvanInstance;
            const double lambda = 0.25;
            const Triangle outer = Triangle::make({0, 0.5}, {0, -0.5}, {1.0, 0});
            const auto m5 = eades_garvan(5, lambda, 0.5).matrix;
            const Drawing d5 = f_drawing(m5, outer);
            CHECK(d5[I::chain(1)].x == Approx(lambda / (1 - lambda * lambda)).epsilon(1e-14));
            CHECK(d5[I::chain(1)].x == Approx(0.26666666666666666).epsilon(1e-14));
            CHECK(d5[I::chain(2)].x == Approx(0.06666666666666667).epsilon(1e-14));

            const auto m7 = eades_garvan(7, lambda, 0.5).matrix;
            const Drawing d7 = f_drawing(m7, outer);
            const auto x = eg_chain_oracle(7, lambda, 1.0);
            for (std::size_t i = 1; i <= 4; ++i) {
                CHECK(std::abs(d7[I::chain(i)].x - x[i - 1]) <= 1e-10 * x[i - 1]);
                CHECK(std::abs(d7[I::chain(i)].y) <= 1e-10);
            }
        }
        SUBCASE("random stacked triangulations") {
            std::mt19937_64 rng(9);
            for (int trial = 0; trial < 20; ++trial) {
                const auto g = random_stacked_triangulation(5 + static_cast<std::size_t>(trial) * 2, rng);
                const auto m = random_coefficients(g, rng, 0.05);
                const Triangle outer = Triangle::make({-2, -1}, {3, 0.5}, {0.1, 2.7});
                const auto e = solve_f_drawing(m, outer);
                const auto oracle = testkit::oracle_f_drawing(m, outer);
                for (Vertex v = 0; v < g->vertex_count(); ++v) {
                    CHECK(e.drawing[v].x == Approx(oracle[v].x).epsilon(1e-11));
                    CHECK(e.drawing[v].y == Approx(oracle[v].y).epsilon(1e-11));
                }
                CHECK(residual(e.drawing, m) <= 1e-10);
                CHECK(e.diagnostics.pivot_growth >= 1.0);
                CHECK(verify_planar_straight_line(e.drawing).planar());
                CHECK(internal_faces_convex(e.drawing));
            }
        }
        SUBCASE("T-drawing equals the uniform F-drawing bit for bit") {
            std::mt19937_64 rng(10);
            const auto g = random_stacked_triangulation(25, rng);
            const Drawing a = t_drawing(g, testkit::unit_equilateral());
            const Drawing b = f_drawing(uniform_coefficients(g), testkit::unit_equilateral());
            CHECK(a.coords() == b.coords());
        }
        SUBCASE("nested triangles n = 12 T-drawing") {
            const auto nt = nested_triangles(12);
            const Drawing d = t_drawing(nt.graph, nt.gamma0.outer_triangle());
            CHECK(verify_planar_straight_line(d).planar());
            CHECK(internal_faces_convex(d));
        }
    }

    TEST_CASE("iterative path agrees with the dense path") {
        std::mt19937_64 rng(12);
        const auto g = random_stacked_triangulation(60, rng);
        const auto m = random_coefficients(g, rng);
        SolverOptions iterative;
        iterative.dense_limit = 0;
        const auto a = solve_f_drawing(m, testkit::unit_equilateral());
        const auto b = solve_f_drawing(m, testkit::unit_equilateral(), iterative);
        CHECK(b.diagnostics.iterative);
        CHECK(max_coordinate_deviation(a.drawing, b.drawing) <= 1e-10);
    }

    TEST_CASE("residual") {
        std::mt19937_64 rng(13);
        const auto g = random_stacked_triangulation(12, rng);
        const auto m = random_coefficients(g, rng);
        const Drawing d = f_drawing(m, testkit::unit_equilateral());
        CHECK(residual(d, m) <= 1e-10);

        // Displace one internal vertex by 0.1 D along x.
        const Vertex v = g->internal_vertices().front();
        std::vector<Point> p = d.coords();
        p[v].x += 0.1 * d.scale();
        double off_diagonal = 0.0;
        for (Vertex w : g->internal_vertices()) {
            double s = 0.0;
            for (const auto& e : m.row(w))
                if (!g->is_external(e.u)) s += e.weight;
            off_diagonal = std::max(off_diagonal, s);
        }
        const double r = residual(Drawing(g, p), m);
        CHECK(r >= 0.1 * (1.0 - off_diagonal));
        CHECK(r > 1e-6);
    }

    TEST_CASE("resolution floor formula") {
        CHECK(resolution_log_floor(0.5, 0.25, 10) == Approx(std::log(0.25) + 10 * std::log(0.25 / 3)));
    }
}
