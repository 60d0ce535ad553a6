#include "barymorph/embedder.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/LU>
#include <fmt/format.h>

#include "barymorph/error.hpp"

namespace barymorph {

BarycentricSystem assemble_system(const CoefficientMatrix& m, const Triangle& outer) {
    if (const auto rep = validate_coefficients(m); !rep.valid())
        throw Error(ErrorKind::InvalidCoefficients, rep.summary());
    const auto& g = m.graph();

    BarycentricSystem sys;
    sys.unknowns = g.internal_vertices();
    sys.row_of.assign(g.vertex_count(), -1);
    for (std::size_t r = 0; r < sys.unknowns.size(); ++r) sys.row_of[sys.unknowns[r]] = static_cast<int>(r);

    const auto n = static_cast<Eigen::Index>(sys.unknowns.size());
    sys.rhs_x = Eigen::VectorXd::Zero(n);
    sys.rhs_y = Eigen::VectorXd::Zero(n);
    std::vector<Eigen::Triplet<double>> triplets;
    for (Eigen::Index r = 0; r < n; ++r) {
        const Vertex v = sys.unknowns[r];
        triplets.emplace_back(r, r, 1.0);
        for (const auto& e : m.row(v)) {
            if (const int c = sys.row_of[e.u]; c >= 0) {
                triplets.emplace_back(r, c, -e.weight);
            } else {
                const Point corner = outer[static_cast<std::size_t>(g.outer_position(e.u))];
                sys.rhs_x[r] += e.weight * corner.x;
                sys.rhs_y[r] += e.weight * corner.y;
            }
        }
    }
    sys.matrix.resize(n, n);
    sys.matrix.setFromTriplets(triplets.begin(), triplets.end());
    return sys;
}

namespace {

double relative_residual(const Eigen::SparseMatrix<double, Eigen::RowMajor>& a, const Eigen::VectorXd& z,
                         const Eigen::VectorXd& b) {
    const double num = (a * z - b).lpNorm<Eigen::Infinity>();
    const double den = b.lpNorm<Eigen::Infinity>();
    return den > 0.0 ? num / den : num;
}

}  // namespace

Embedding solve_f_drawing(const CoefficientMatrix& m, const Triangle& outer, SolverOptions opts) {
    const BarycentricSystem sys = assemble_system(m, outer);
    const auto& g = m.graph();
    const auto n = static_cast<Eigen::Index>(sys.unknowns.size());

    SolveDiagnostics diag;
    Eigen::VectorXd x, y;
    if (static_cast<std::size_t>(n) <= opts.dense_limit) {
        const Eigen::MatrixXd dense(sys.matrix);
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(dense);
        const Eigen::MatrixXd& packed = lu.matrixLU();
        double max_u = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (packed(j, j) == 0.0 || !std::isfinite(packed(j, j)))
                throw Error(ErrorKind::SingularSystem, fmt::format("zero pivot in column {}", j));
            for (Eigen::Index i = 0; i <= j; ++i) max_u = std::max(max_u, std::abs(packed(i, j)));
        }
        diag.pivot_growth = max_u / dense.cwiseAbs().maxCoeff();
        x = lu.solve(sys.rhs_x);
        y = lu.solve(sys.rhs_y);
    } else {
        Eigen::SparseMatrix<double> colmajor(sys.matrix);
        Eigen::BiCGSTAB<Eigen::SparseMatrix<double>> solver;
        solver.setTolerance(opts.iterative_tolerance);
        solver.setMaxIterations(static_cast<Eigen::Index>(10 * n));
        solver.compute(colmajor);
        if (solver.info() != Eigen::Success) throw Error(ErrorKind::SingularSystem, "iterative setup failed");
        x = solver.solve(sys.rhs_x);
        diag.iterations = static_cast<std::size_t>(solver.iterations());
        y = solver.solve(sys.rhs_y);
        diag.iterations = std::max(diag.iterations, static_cast<std::size_t>(solver.iterations()));
        diag.iterative = true;
    }
    if (!x.allFinite() || !y.allFinite()) throw Error(ErrorKind::SingularSystem, "non-finite solution");

    diag.residual_x = relative_residual(sys.matrix, x, sys.rhs_x);
    diag.residual_y = relative_residual(sys.matrix, y, sys.rhs_y);
    const double res = std::max(diag.residual_x, diag.residual_y);
    if (!(res <= opts.residual_tolerance))
        throw Error(ErrorKind::ResidualTooLarge, fmt::format("relative residual {:.3e}", res));

    std::vector<Point> coords(g.vertex_count());
    for (int i = 0; i < 3; ++i) coords[g.outer_cycle()[i]] = outer[static_cast<std::size_t>(i)];
    for (Eigen::Index r = 0; r < n; ++r) coords[sys.unknowns[r]] = {x[r], y[r]};
    return {Drawing(m.graph_ptr(), std::move(coords)), diag};
}

Drawing f_drawing(const CoefficientMatrix& m, const Triangle& outer, SolverOptions opts) {
    return solve_f_drawing(m, outer, opts).drawing;
}

Drawing t_drawing(std::shared_ptr<const PlaneGraph> graph, const Triangle& outer) {
    return f_drawing(uniform_coefficients(std::move(graph)), outer);
}

double residual(const Drawing& d, const CoefficientMatrix& m) {
    if (d.graph_ptr() != m.graph_ptr() && !(d.graph() == m.graph()))
        throw Error(ErrorKind::GraphMismatch, "drawing and coefficients of different graphs");
    double worst = 0.0;
    for (Vertex v : d.graph().internal_vertices()) {
        double sx = 0.0, sy = 0.0;
        for (const auto& e : m.row(v)) {
            sx += e.weight * d[e.u].x;
            sy += e.weight * d[e.u].y;
        }
        worst = std::max({worst, std::abs(d[v].x - sx), std::abs(d[v].y - sy)});
    }
    return worst / d.scale();
}

double resolution_log_floor(double triangle_res, double lambda_min, std::size_t n) {
    return std::log(triangle_res / 2.0) + static_cast<double>(n) * std::log(lambda_min / 3.0);
}

bool internal_faces_convex(const Drawing& d) {
    return std::all_of(d.graph().faces().begin(), d.graph().faces().end(),
                       [&](const Face& f) { return orient(d[f[0]], d[f[1]], d[f[2]]) > 0.0; });
}

}  // namespace barymorph
