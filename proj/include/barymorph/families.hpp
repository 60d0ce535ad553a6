#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <vector>

#include "barymorph/coefficients.hpp"
#include "barymorph/geometry.hpp"
#include "barymorph/plane_graph.hpp"

namespace barymorph {

// ---------------------------------------------------------------------------
// Eades-Garvan chain
//
// Ids: u = 0, v = 1, z = v_0 = 2, v_i = 2 + i for i = 1..n-3.
// Every chain vertex v_i (i >= 1) is adjacent to u, v, v_{i-1} and v_{i+1};
// the last one closes the fan with the face (u, v, v_{n-3}).
// ---------------------------------------------------------------------------

struct EadesGarvanInstance {
    std::shared_ptr<const PlaneGraph> graph;
    CoefficientMatrix matrix;
    Triangle outer;
    double lambda = 0.0;
    double r = 0.0;

    static constexpr Vertex u = 0;
    static constexpr Vertex v = 1;
    static constexpr Vertex z = 2;
    /// Chain vertex v_i, with v_0 = z.
    [[nodiscard]] static constexpr Vertex chain(std::size_t i) noexcept { return static_cast<Vertex>(2 + i); }
};

/// n >= 5, 0 < lambda <= 1/4, 0 < r <= sqrt(3)/2; throws `ParameterOutOfRange`.
[[nodiscard]] EadesGarvanInstance eades_garvan(std::size_t n, double lambda, double r);

/// x(v_1), ..., x(v_{n-3}) of the chain drawing, from a direct tridiagonal
/// solve of x_i = lambda (x_{i-1} + x_{i+1}) with x_0 = r and
/// x_{n-3} = lambda x_{n-4}.
[[nodiscard]] std::vector<double> eg_chain_oracle(std::size_t n, double lambda, double r);

/// log(r (lambda / (1 - lambda))^(n-4)), an upper bound on the chain
/// drawing's resolution.
[[nodiscard]] double eg_resolution_log_ceiling(std::size_t n, double lambda, double r);

// ---------------------------------------------------------------------------
// Nested triangles
//
// k = n / 3 rings (u_i, v_i, z_i), ids 3(i-1), 3(i-1)+1, 3(i-1)+2. Ring i is
// joined to ring i+1 by the spines u_i u_{i+1}, v_i v_{i+1}, z_i z_{i+1} and
// the diagonals u_i z_{i+1}, z_i v_{i+1}, v_i u_{i+1}. Outer cycle is ring k.
// ---------------------------------------------------------------------------

struct NestedTrianglesInstance {
    std::shared_ptr<const PlaneGraph> graph;
    std::size_t k = 0;
    Drawing gamma0;  // straight labeling
    Drawing gamma1;  // labels rotated by one position per ring, going inwards

    /// 1-based ring index.
    [[nodiscard]] static constexpr Vertex u(std::size_t i) noexcept { return static_cast<Vertex>(3 * (i - 1)); }
    [[nodiscard]] static constexpr Vertex v(std::size_t i) noexcept { return static_cast<Vertex>(3 * (i - 1) + 1); }
    [[nodiscard]] static constexpr Vertex z(std::size_t i) noexcept { return static_cast<Vertex>(3 * (i - 1) + 2); }
};

/// n >= 6 and a multiple of 3; throws `ParameterOutOfRange`.
[[nodiscard]] NestedTrianglesInstance nested_triangles(std::size_t n);

/// Log of (sqrt(3)/2) * 0.9375^((k-2)/2): with every ring area at most
/// 0.9375 of the next one, the resolution of the drawing cannot exceed this.
[[nodiscard]] double nested_resolution_log_ceiling(std::size_t k);

// ---------------------------------------------------------------------------
// Random instances for property tests
// ---------------------------------------------------------------------------

/// Stacked triangulation: start from K4 and split a uniformly chosen internal
/// face with a new vertex until n vertices exist. Outer cycle (0, 1, 2).
[[nodiscard]] std::shared_ptr<const PlaneGraph> random_stacked_triangulation(std::size_t n, std::mt19937_64& rng);

/// Weights drawn uniformly from [min_weight, 1] and normalized per row.
[[nodiscard]] CoefficientMatrix random_coefficients(std::shared_ptr<const PlaneGraph> graph, std::mt19937_64& rng,
                                                    double min_weight = 0.2);

}  // namespace barymorph
