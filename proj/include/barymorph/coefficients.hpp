#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "barymorph/geometry.hpp"
#include "barymorph/plane_graph.hpp"

namespace barymorph {

/// Convex-combination weights: row v holds lambda_vu for the neighbors u of
/// an internal vertex v. Rows of external vertices are empty.
class CoefficientMatrix {
public:
    struct Entry {
        Vertex u = 0;
        double weight = 0.0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    /// All-zero matrix over `graph`.
    explicit CoefficientMatrix(std::shared_ptr<const PlaneGraph> graph);

    [[nodiscard]] const PlaneGraph& graph() const noexcept { return *graph_; }
    [[nodiscard]] const std::shared_ptr<const PlaneGraph>& graph_ptr() const noexcept { return graph_; }

    /// Sets lambda_vu. Throws `UnknownVertex` for ids outside the graph.
    void set(Vertex v, Vertex u, double weight);
    /// lambda_vu, or 0 when no entry is stored.
    [[nodiscard]] double weight(Vertex v, Vertex u) const;
    /// Entries of row v, sorted by column.
    [[nodiscard]] std::span<const Entry> row(Vertex v) const { return rows_.at(v); }

    /// Smallest positive stored entry (infinity when there is none).
    [[nodiscard]] double min_positive() const;

    friend bool operator==(const CoefficientMatrix& a, const CoefficientMatrix& b) {
        return a.rows_ == b.rows_ && *a.graph_ == *b.graph_;
    }

private:
    std::shared_ptr<const PlaneGraph> graph_;
    std::vector<std::vector<Entry>> rows_;
};

struct CoefficientViolation {
    enum class Kind { external_row, not_an_edge, non_positive, row_sum, min_entry_bound };
    Kind kind;
    Vertex v = 0;
    Vertex u = 0;
    std::string detail;
};

struct CoefficientReport {
    double min_lambda = 0.0;
    std::vector<CoefficientViolation> violations;

    [[nodiscard]] bool valid() const noexcept { return violations.empty(); }
    [[nodiscard]] std::string summary(std::size_t max_items = 5) const;
};

/// Support, positivity, unit row sums (1e-12 absolute), and the bound on the
/// smallest entry (1/3 for n >= 4, 1/4 for n >= 5).
[[nodiscard]] CoefficientReport validate_coefficients(const CoefficientMatrix& m);

/// lambda_vu = 1 / deg(v) for every internal v.
[[nodiscard]] CoefficientMatrix uniform_coefficients(std::shared_ptr<const PlaneGraph> graph);

/// Entrywise (1 - t) m0 + t m1. Throws `GraphMismatch` when the graphs differ.
[[nodiscard]] CoefficientMatrix interpolate(const CoefficientMatrix& m0, const CoefficientMatrix& m1, double t);

/// One ray of the recovery: from neighbor u_k through v until it leaves the
/// neighbor polygon at vertex u_i or inside edge (u_i, u_{i+1}).
struct RayHit {
    enum class Kind { vertex, edge };
    std::size_t k = 0;
    std::size_t i = 0;
    Kind kind = Kind::edge;
    double mu_self = 0.0;  // weight of u_k
    double mu_i = 0.0;     // weight of u_i
    double mu_next = 0.0;  // weight of u_{i+1}; exactly 0 for vertex hits
};

struct VertexRecovery {
    Vertex v = 0;
    std::vector<Vertex> neighbors_cw;
    std::vector<RayHit> rays;  // rays[k] starts at neighbors_cw[k]
};

struct RecoveryTrace {
    std::vector<VertexRecovery> vertices;  // internal vertices in id order
};

struct Recovery {
    CoefficientMatrix matrix;
    RecoveryTrace trace;
};

/// Coefficients reproducing a planar straight-line drawing, built by
/// averaging the barycentric weights of one ray per neighbor. Throws
/// `NonStarShaped` when some neighbor polygon is not star-shaped around its
/// vertex.
[[nodiscard]] Recovery recover_coefficients(const Drawing& d);

}  // namespace barymorph
