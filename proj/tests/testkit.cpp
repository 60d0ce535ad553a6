#include "testkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "barymorph/embedder.hpp"
#include "barymorph/families.hpp"
#include "barymorph/morph.hpp"

namespace testkit {

std::shared_ptr<const PlaneGraph> k4() {
    const std::vector<Face> faces{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
    return std::make_shared<const PlaneGraph>(PlaneGraph::build(4, faces, {0, 1, 2}));
}

Triangle unit_equilateral() { return Triangle::make({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}); }

std::vector<double> gauss_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) throw std::runtime_error("singular oracle system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

std::vector<Point> oracle_f_drawing(const CoefficientMatrix& m, const Triangle& outer) {
    const auto& g = m.graph();
    const std::size_t n = g.vertex_count();
    std::vector<int> slot(n, -1);
    std::vector<Vertex> unknown;
    for (Vertex v = 0; v < n; ++v) {
        const auto& o = g.outer_cycle();
        if (v != o[0] && v != o[1] && v != o[2]) {
            slot[v] = static_cast<int>(unknown.size());
            unknown.push_back(v);
        }
    }
    std::vector<Point> fixed(n);
    for (int i = 0; i < 3; ++i) fixed[g.outer_cycle()[i]] = outer[static_cast<std::size_t>(i)];

    const std::size_t k = unknown.size();
    std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
    std::vector<double> bx(k, 0.0), by(k, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
        a[r][r] = 1.0;
        for (Vertex u = 0; u < n; ++u) {
            const double w = m.weight(unknown[r], u);
            if (w == 0.0) continue;
            if (slot[u] >= 0) {
                a[r][static_cast<std::size_t>(slot[u])] -= w;
            } else {
                bx[r] += w * fixed[u].x;
                by[r] += w * fixed[u].y;
            }
        }
    }
    const auto x = gauss_solve(a, bx);
    const auto y = gauss_solve(a, by);
    std::vector<Point> p = fixed;
    for (std::size_t r = 0; r < k; ++r) p[unknown[r]] = {x[r], y[r]};
    return p;
}

namespace {

double seg_dist(Point p, Point a, Point b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

bool proper_cross(Point a, Point b, Point c, Point d) {
    auto o = [](Point p, Point q, Point r) { return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x); };
    const double o1 = o(a, b, c), o2 = o(a, b, d), o3 = o(c, d, a), o4 = o(c, d, b);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

}  // namespace

double oracle_min_separated_distance(const Drawing& d) {
    const auto& g = d.graph();
    const std::size_t n = g.vertex_count();
    double best = std::numeric_limits<double>::infinity();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) best = std::min(best, std::hypot(d[u].x - d[v].x, d[u].y - d[v].y));
    for (Vertex v = 0; v < n; ++v)
        for (const Edge& e : g.edges())
            if (e.a != v && e.b != v) best = std::min(best, seg_dist(d[v], d[e.a], d[e.b]));
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge e = es[i], f = es[j];
            if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
            if (proper_cross(d[e.a], d[e.b], d[f.a], d[f.b])) return 0.0;
            best = std::min({best, seg_dist(d[e.a], d[f.a], d[f.b]), seg_dist(d[e.b], d[f.a], d[f.b]),
                             seg_dist(d[f.a], d[e.a], d[e.b]), seg_dist(d[f.b], d[e.a], d[e.b])});
        }
    return best;
}

DrawingPair random_pair(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto g = random_stacked_triangulation(n, rng);
    const auto m0 = random_coefficients(g, rng);
    const auto m1 = random_coefficients(g, rng);
    const Triangle outer = Triangle::make({-1.0, -0.5}, {2.0, 0.0}, {0.25, 1.75});
    return {f_drawing(m0, outer), f_drawing(m1, outer)};
}

const std::vector<CorpusItem>& corpus() {
    static const std::vector<CorpusItem> items = [] {
        std::vector<CorpusItem> out;
        std::mt19937_64 rng(20240611);
        for (int i = 0; i < 60; ++i) {
            const std::size_t n = 4 + static_cast<std::size_t>(i) * 46 / 59;
            const auto g = random_stacked_triangulation(n, rng);
            out.push_back({fmt::format("stacked-f n={} #{}", n, i), f_drawing(random_coefficients(g, rng), unit_equilateral())});
            if (i % 3 == 0) out.push_back({fmt::format("stacked-t n={} #{}", n, i), t_drawing(g, unit_equilateral())});
        }
        for (std::size_t n = 5; n <= 12; ++n) {
            const auto eg = eades_garvan(n, 0.25, std::sqrt(3.0) / 2.0);
            out.push_back({fmt::format("eades-garvan n={}", n), f_drawing(eg.matrix, eg.outer)});
        }
        for (std::size_t n = 6; n <= 15; n += 3) {
            const auto nt = nested_triangles(n);
            out.push_back({fmt::format("nested gamma0 n={}", n), nt.gamma0});
            out.push_back({fmt::format("nested gamma1 n={}", n), nt.gamma1});
            out.push_back({fmt::format("nested half n={}", n), morph_at(morph_between(nt.gamma0, nt.gamma1), 0.5)});
        }
        return out;
    }();
    return items;
}

}  // namespace testkit
