#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "barymorph/coefficients.hpp"
#include "barymorph/geometry.hpp"

namespace barymorph {

/// The linear system for the internal vertices: unit diagonal, -lambda_vu
/// for internal neighbors, external neighbors moved to the right-hand side.
/// The x and y systems share the matrix.
struct BarycentricSystem {
    std::vector<Vertex> unknowns;  // row index -> internal vertex
    std::vector<int> row_of;       // vertex -> row index, -1 for external vertices
    Eigen::SparseMatrix<double, Eigen::RowMajor> matrix;
    Eigen::VectorXd rhs_x;
    Eigen::VectorXd rhs_y;
};

/// Outer vertex i of the stored outer cycle is pinned to corner i of `outer`.
/// Throws `InvalidCoefficients` when `m` fails validation.
[[nodiscard]] BarycentricSystem assemble_system(const CoefficientMatrix& m, const Triangle& outer);

struct SolverOptions {
    /// Dense LU up to this many unknowns, BiCGSTAB above.
    std::size_t dense_limit = 4096;
    double residual_tolerance = 1e-10;
    double iterative_tolerance = 1e-12;
};

struct SolveDiagnostics {
    double residual_x = 0.0;  // relative, infinity norm
    double residual_y = 0.0;
    double pivot_growth = 1.0;  // max |U| / max |A| for the dense path
    bool iterative = false;
    std::size_t iterations = 0;
};

struct Embedding {
    Drawing drawing;
    SolveDiagnostics diagnostics;
};

/// F-drawing of `m` with the outer cycle pinned to `outer`. Throws
/// `SingularSystem` or `ResidualTooLarge`.
[[nodiscard]] Embedding solve_f_drawing(const CoefficientMatrix& m, const Triangle& outer, SolverOptions opts = {});
[[nodiscard]] Drawing f_drawing(const CoefficientMatrix& m, const Triangle& outer, SolverOptions opts = {});

/// Tutte drawing: every internal vertex at the barycenter of its neighbors.
[[nodiscard]] Drawing t_drawing(std::shared_ptr<const PlaneGraph> graph, const Triangle& outer);

/// Max over internal v and both axes of |p(v) - sum lambda_vu p(u)|, divided
/// by the drawing scale.
[[nodiscard]] double residual(const Drawing& d, const CoefficientMatrix& m);

/// log((r / 2) (lambda / 3)^n): the lower bound on the resolution of any
/// F-drawing with triangle resolution r and smallest coefficient lambda.
[[nodiscard]] double resolution_log_floor(double triangle_res, double lambda_min, std::size_t n);

/// Every internal face counter-clockwise with positive area.
[[nodiscard]] bool internal_faces_convex(const Drawing& d);

}  // namespace barymorph
