#include "barymorph/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "barymorph/error.hpp"

namespace barymorph {

CoefficientMatrix::CoefficientMatrix(std::shared_ptr<const PlaneGraph> graph)
    : graph_(std::move(graph)), rows_(graph_ ? graph_->vertex_count() : 0) {
    if (!graph_) throw Error(ErrorKind::InvalidCoefficients, "coefficient matrix without a graph");
}

void CoefficientMatrix::set(Vertex v, Vertex u, double weight) {
    if (!graph_->contains(v) || !graph_->contains(u))
        throw Error(ErrorKind::UnknownVertex, fmt::format("entry ({}, {}) outside the graph", v, u));
    auto& r = rows_[v];
    auto it = std::lower_bound(r.begin(), r.end(), u, [](const Entry& e, Vertex x) { return e.u < x; });
    if (it != r.end() && it->u == u)
        it->weight = weight;
    else
        r.insert(it, Entry{u, weight});
}

double CoefficientMatrix::weight(Vertex v, Vertex u) const {
    const auto& r = rows_.at(v);
    auto it = std::lower_bound(r.begin(), r.end(), u, [](const Entry& e, Vertex x) { return e.u < x; });
    return (it != r.end() && it->u == u) ? it->weight : 0.0;
}

double CoefficientMatrix::min_positive() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : rows_)
        for (const auto& e : r)
            if (e.weight > 0.0) best = std::min(best, e.weight);
    return best;
}

std::string CoefficientReport::summary(std::size_t max_items) const {
    if (violations.empty()) return fmt::format("valid, min lambda {:.17g}", min_lambda);
    std::string s = fmt::format("{} violation(s)", violations.size());
    for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) s += "; " + violations[i].detail;
    return s;
}

CoefficientReport validate_coefficients(const CoefficientMatrix& m) {
    using K = CoefficientViolation::Kind;
    const auto& g = m.graph();
    CoefficientReport rep;
    rep.min_lambda = std::numeric_limits<double>::infinity();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto row = m.row(v);
        if (g.is_external(v)) {
            for (const auto& e : row)
                if (e.weight != 0.0)
                    rep.violations.push_back(
                        {K::external_row, v, e.u, fmt::format("external vertex {} has an entry for {}", v, e.u)});
            continue;
        }
        double sum = 0.0;
        for (const auto& e : row) {
            if (!g.adjacent(v, e.u)) {
                if (e.weight != 0.0)
                    rep.violations.push_back(
                        {K::not_an_edge, v, e.u, fmt::format("entry ({}, {}) is not an edge", v, e.u)});
                continue;
            }
            sum += e.weight;
        }
        for (Vertex u : g.neighbors_ccw(v)) {
            const double w = m.weight(v, u);
            if (!(w > 0.0) || !std::isfinite(w))
                rep.violations.push_back(
                    {K::non_positive, v, u, fmt::format("lambda({}, {}) = {} is not positive", v, u, w)});
            else
                rep.min_lambda = std::min(rep.min_lambda, w);
        }
        if (!(std::abs(sum - 1.0) <= 1e-12))
            rep.violations.push_back({K::row_sum, v, v, fmt::format("row {} sums to {:.17g}", v, sum)});
    }
    const std::size_t n = g.vertex_count();
    const double bound = n >= 5 ? 0.25 : 1.0 / 3.0;
    if (rep.violations.empty() && rep.min_lambda > bound + 1e-12)
        rep.violations.push_back({K::min_entry_bound, 0, 0,
                                  fmt::format("smallest entry {:.17g} exceeds {:.17g}", rep.min_lambda, bound)});
    return rep;
}

CoefficientMatrix uniform_coefficients(std::shared_ptr<const PlaneGraph> graph) {
    CoefficientMatrix m(graph);
    for (Vertex v : graph->internal_vertices()) {
        const auto nb = graph->neighbors_ccw(v);
        const double w = 1.0 / static_cast<double>(nb.size());
        for (Vertex u : nb) m.set(v, u, w);
    }
    return m;
}

CoefficientMatrix interpolate(const CoefficientMatrix& m0, const CoefficientMatrix& m1, double t) {
    if (m0.graph_ptr() != m1.graph_ptr() && !(m0.graph() == m1.graph()))
        throw Error(ErrorKind::GraphMismatch, "interpolating coefficient matrices of different graphs");
    if (t == 0.0) return m0;
    if (t == 1.0) return m1;
    CoefficientMatrix out(m0.graph_ptr());
    for (Vertex v = 0; v < m0.graph().vertex_count(); ++v) {
        for (const auto& e : m0.row(v)) out.set(v, e.u, (1.0 - t) * e.weight + t * m1.weight(v, e.u));
        for (const auto& e : m1.row(v))
            if (m0.weight(v, e.u) == 0.0) out.set(v, e.u, t * e.weight);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Recovery
// ---------------------------------------------------------------------------

namespace {

constexpr double kAngularEps = 1e-10;
constexpr double kNegativeSlack = 1e-9;

RayHit shoot(const Drawing& d, Vertex v, const std::vector<Vertex>& nb, std::size_t k) {
    const std::size_t deg = nb.size();
    const Point pv = d[v];
    const Point pk = d[nb[k]];
    const Point dir = pv - pk;
    const double dir_len = std::hypot(dir.x, dir.y);

    auto opposite = [&](std::size_t i) { return i != k && (i + 1) % deg != k; };

    // Passing through a neighbor takes precedence; lowest index wins ties.
    for (std::size_t i = 0; i < deg; ++i) {
        if (i == k) continue;
        const Point a = d[nb[i]] - pv;
        const double len = std::hypot(a.x, a.y);
        if (dot(a, dir) > 0.0 && std::abs(cross(a, dir)) <= kAngularEps * len * dir_len) {
            if (i == (k + 1) % deg || (i + 1) % deg == k)
                throw Error(ErrorKind::NonStarShaped,
                            fmt::format("face ({}, {}, {}) is degenerate", v, nb[k], nb[i]));
            const Point seg = d[nb[i]] - pk;
            const double mu_i = dot(pv - pk, seg) / dot(seg, seg);
            if (!(mu_i > 0.0 && mu_i < 1.0))
                throw Error(ErrorKind::NonStarShaped,
                            fmt::format("vertex {} is not between neighbors {} and {}", v, nb[k], nb[i]));
            return {k, i, RayHit::Kind::vertex, 1.0 - mu_i, mu_i, 0.0};
        }
    }

    // Neighbors run clockwise, so the wedge from u_i to u_{i+1} is swept clockwise.
    for (std::size_t i = 0; i < deg; ++i) {
        if (!opposite(i)) continue;
        const std::size_t j = (i + 1) % deg;
        const Point a = d[nb[i]] - pv;
        const Point b = d[nb[j]] - pv;
        if (!(cross(a, dir) < 0.0 && cross(dir, b) < 0.0)) continue;

        const Point pi = d[nb[i]], pj = d[nb[j]];
        const double area = orient(pk, pi, pj);
        double w[3] = {orient(pv, pi, pj) / area, orient(pk, pv, pj) / area, orient(pk, pi, pv) / area};
        for (double& x : w) {
            if (x < -kNegativeSlack || !std::isfinite(x))
                throw Error(ErrorKind::NonStarShaped,
                            fmt::format("ray from {} through {} leaves the neighbor polygon inconsistently", nb[k], v));
            x = std::max(x, 0.0);
        }
        const double sum = w[0] + w[1] + w[2];
        return {k, i, RayHit::Kind::edge, w[0] / sum, w[1] / sum, w[2] / sum};
    }
    throw Error(ErrorKind::NonStarShaped,
                fmt::format("ray from {} through {} does not exit through an opposite edge", nb[k], v));
}

}  // namespace

Recovery recover_coefficients(const Drawing& d) {
    const auto& g = d.graph();
    Recovery out{CoefficientMatrix(d.graph_ptr()), {}};
    for (Vertex v : g.internal_vertices()) {
        VertexRecovery vr;
        vr.v = v;
        vr.neighbors_cw = g.neighbors_cw(v);
        const std::size_t deg = vr.neighbors_cw.size();
        std::vector<double> acc(deg, 0.0);
        for (std::size_t k = 0; k < deg; ++k) {
            const RayHit hit = shoot(d, v, vr.neighbors_cw, k);
            acc[k] += hit.mu_self;
            acc[hit.i] += hit.mu_i;
            acc[(hit.i + 1) % deg] += hit.mu_next;
            vr.rays.push_back(hit);
        }
        for (std::size_t k = 0; k < deg; ++k)
            out.matrix.set(v, vr.neighbors_cw[k], acc[k] / static_cast<double>(deg));
        out.trace.vertices.push_back(std::move(vr));
    }
    return out;
}

}  // namespace barymorph
