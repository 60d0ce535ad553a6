#include <doctest.h>

#include <cmath>
#include <random>

#include "barymorph/embedder.hpp"
#include "barymorph/error.hpp"
#include "barymorph/families.hpp"
#include "testkit.hpp"

using namespace barymorph;
using doctest::Approx;

namespace {

const double kR = std::sqrt(3.0) / 2;

template <typename F>
ErrorKind error_of(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

}  // namespace

TEST_SUITE("families") {
    TEST_CASE("Eades-Garvan parameters") {
        CHECK(error_of([] { (void)eades_garvan(5, 0.25, 1.0); }) == ErrorKind::ParameterOutOfRange);
        CHECK(error_of([] { (void)eades_garvan(4, 0.25, 0.5); }) == ErrorKind::ParameterOutOfRange);
        CHECK(error_of([] { (void)eades_garvan(6, 0.3, 0.5); }) == ErrorKind::ParameterOutOfRange);
        CHECK(error_of([] { (void)eades_garvan(6, 0.0, 0.5); }) == ErrorKind::ParameterOutOfRange);
        CHECK_NOTHROW((void)eades_garvan(5, 0.25, kR));
    }

    TEST_CASE("Eades-Garvan matrix entries") {
        using I = EadesGarvanInstance;
        const std::size_t n = 9;
        const double lambda = 0.2;
        const auto eg = eades_garvan(n, lambda, 0.5);
        CHECK(triangle_resolution(eg.outer) == Approx(0.5).epsilon(1e-12));
        for (std::size_t i = 1; i <= n - 4; ++i) {
            CHECK(eg.matrix.weight(I::chain(i), I::chain(i + 1)) == lambda);
            CHECK(eg.matrix.weight(I::chain(i + 1), I::chain(i)) == lambda);
            CHECK(eg.matrix.weight(I::chain(i), I::u) == 0.5 - lambda);
            CHECK(eg.matrix.weight(I::chain(i), I::v) == 0.5 - lambda);
        }
        CHECK(eg.matrix.weight(I::chain(1), I::z) == lambda);
        CHECK(eg.matrix.weight(I::chain(n - 3), I::u) == 0.5 - lambda / 2);
        CHECK(eg.matrix.weight(I::chain(n - 3), I::v) == 0.5 - lambda / 2);
        CHECK(validate_coefficients(eg.matrix).valid());
    }

    TEST_CASE("chain oracle") {
        SUBCASE("n = 5 closed form") {
            const auto x = eg_chain_oracle(5, 0.25, 1.0);
            REQUIRE(x.size() == 2);
            CHECK(x[0] == Approx(0.25 / (1 - 0.0625)).epsilon(1e-15));
            CHECK(x[0] == Approx(0.2666666666666667).epsilon(1e-15));
            CHECK(x[1] == Approx(0.0666666666666667).epsilon(1e-15));
        }
        SUBCASE("monotone decreasing") {
            const auto x = eg_chain_oracle(25, 0.25, kR);
            for (std::size_t i = 0; i + 1 < x.size(); ++i) CHECK(x[i + 1] < x[i]);
        }
        SUBCASE("agrees with a dense solve") {
            for (std::size_t n = 5; n <= 20; ++n) {
                const std::size_t k = n - 3;
                std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
                std::vector<double> b(k, 0.0);
                for (std::size_t i = 0; i < k; ++i) {
                    a[i][i] = 1.0;
                    if (i > 0) a[i][i - 1] = -0.25;
                    if (i + 1 < k) a[i][i + 1] = -0.25;
                }
                b[0] = 0.25 * kR;
                const auto dense = testkit::gauss_solve(a, b);
                const auto x = eg_chain_oracle(n, 0.25, kR);
                for (std::size_t i = 0; i < k; ++i) CHECK(x[i] == Approx(dense[i]).epsilon(1e-12));
            }
        }
        SUBCASE("F-drawing x-coordinates on the axis") {
            using I = EadesGarvanInstance;
            for (std::size_t n = 5; n <= 25; ++n) {
                const auto eg = eades_garvan(n, 0.25, kR);
                const Drawing d = f_drawing(eg.matrix, eg.outer);
                const auto x = eg_chain_oracle(n, 0.25, kR);
                for (std::size_t i = 1; i <= n - 3; ++i) {
                    CHECK(std::abs(d[I::chain(i)].x - x[i - 1]) <= 1e-10 * x[i - 1]);
                    CHECK(std::abs(d[I::chain(i)].y) <= 1e-10 * d.scale());
                }
            }
        }
    }

    TEST_CASE("Eades-Garvan sandwich") {
        for (std::size_t n = 5; n <= 20; ++n) {
            const auto eg = eades_garvan(n, 0.25, kR);
            const Drawing d = f_drawing(eg.matrix, eg.outer);
            const double measured = separated_object_extremes(d).log_resolution();
            CHECK(measured <= eg_resolution_log_ceiling(n, 0.25, kR) + 1e-9);
            CHECK(measured >= resolution_log_floor(kR, 0.25, n) - 1e-9);
        }
        CHECK(eg_resolution_log_ceiling(20, 0.25, kR) == Approx(std::log(kR) - 16 * std::log(3.0)));
    }

    TEST_CASE("nested triangles") {
        using I = NestedTrianglesInstance;
        CHECK(error_of([] { (void)nested_triangles(7); }) == ErrorKind::ParameterOutOfRange);
        CHECK(error_of([] { (void)nested_triangles(3); }) == ErrorKind::ParameterOutOfRange);

        SUBCASE("n = 6 coordinates") {
            const auto nt = nested_triangles(6);
            CHECK(nt.k == 2);
            CHECK(nt.gamma0[I::u(1)] == Point{-1, -1});
            CHECK(nt.gamma0[I::v(1)] == Point{1, -1});
            CHECK(nt.gamma0[I::z(1)] == Point{0, 1});
        }
        SUBCASE("Gamma1 positions ring by ring") {
            // Ring k keeps its place; each ring further in turns one step.
            const auto nt = nested_triangles(18);
            const std::size_t k = nt.k;
            auto top = [](double i) { return Point{0, i}; };
            auto right = [](double i) { return Point{i, -i}; };
            auto left = [](double i) { return Point{-i, -i}; };
            for (std::size_t i = k; i >= 1; --i) {
                const auto d = static_cast<double>(i);
                const std::size_t s = (k - i) % 3;
                CAPTURE(i);
                if (s == 0) {
                    CHECK(nt.gamma1[I::z(i)] == top(d));
                    CHECK(nt.gamma1[I::v(i)] == right(d));
                    CHECK(nt.gamma1[I::u(i)] == left(d));
                } else if (s == 1) {
                    CHECK(nt.gamma1[I::z(i)] == right(d));
                    CHECK(nt.gamma1[I::v(i)] == left(d));
                    CHECK(nt.gamma1[I::u(i)] == top(d));
                } else {
                    CHECK(nt.gamma1[I::z(i)] == left(d));
                    CHECK(nt.gamma1[I::v(i)] == top(d));
                    CHECK(nt.gamma1[I::u(i)] == right(d));
                }
            }
        }
        SUBCASE("planar, same outer triangle, min distance bounded below") {
            for (std::size_t n = 6; n <= 30; n += 3) {
                const auto nt = nested_triangles(n);
                CHECK(verify_planar_straight_line(nt.gamma0).planar());
                CHECK(verify_planar_straight_line(nt.gamma1).planar());
                const auto a = nt.gamma0.outer_triangle().corners();
                const auto b = nt.gamma1.outer_triangle().corners();
                CHECK(a == b);
                const auto k = static_cast<double>(nt.k);
                CHECK(a[0] == Point{-k, -k});
                CHECK(a[1] == Point{k, -k});
                CHECK(a[2] == Point{0, k});
                CHECK(separated_object_extremes(nt.gamma0).min_dist ==
                      Approx(testkit::oracle_min_separated_distance(nt.gamma0)).epsilon(1e-14));
            }
        }
        SUBCASE("ceiling is only defined with inner rings") {
            CHECK(nested_resolution_log_ceiling(3) == Approx(std::log(kR) + 0.5 * std::log(0.9375)));
        }
    }

    TEST_CASE("random instances") {
        std::mt19937_64 a(99), b(99);
        const auto g1 = random_stacked_triangulation(30, a);
        const auto g2 = random_stacked_triangulation(30, b);
        CHECK(*g1 == *g2);
        const auto m = random_coefficients(g1, a, 0.3);
        CHECK(validate_coefficients(m).valid());
    }
}
