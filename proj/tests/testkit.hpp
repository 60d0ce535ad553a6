#pragma once

// Shared fixtures and independent oracles for the test binaries. Nothing here
// calls into the solver or distance code it is used to check.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "barymorph/coefficients.hpp"
#include "barymorph/geometry.hpp"
#include "barymorph/plane_graph.hpp"

namespace testkit {

using namespace barymorph;

/// K4 with outer cycle (0, 1, 2) and center 3.
[[nodiscard]] std::shared_ptr<const PlaneGraph> k4();
[[nodiscard]] Triangle unit_equilateral();

/// Dense Gaussian elimination with partial pivoting.
[[nodiscard]] std::vector<double> gauss_solve(std::vector<std::vector<double>> a, std::vector<double> b);

/// F-drawing from a dense solve of the barycentric equations, written from the
/// defining relation p(v) = sum_u lambda_vu p(u).
[[nodiscard]] std::vector<Point> oracle_f_drawing(const CoefficientMatrix& m, const Triangle& outer);

/// Minimum distance over separated pairs by plain enumeration.
[[nodiscard]] double oracle_min_separated_distance(const Drawing& d);

struct CorpusItem {
    std::string name;
    Drawing drawing;
};

/// Fixed-seed collection of planar drawings: random F- and T-drawings of
/// stacked triangulations, chain drawings, nested-triangles drawings and
/// their morph midpoints. At least 100 items.
[[nodiscard]] const std::vector<CorpusItem>& corpus();

/// Two F-drawings of one random stacked triangulation with a shared outer
/// triangle.
struct DrawingPair {
    Drawing from;
    Drawing to;
};
[[nodiscard]] DrawingPair random_pair(std::size_t n, std::uint64_t seed);

}  // namespace testkit
