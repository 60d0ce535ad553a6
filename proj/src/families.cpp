#include "barymorph/families.hpp"

#include <cmath>

#include <fmt/format.h>

#include "barymorph/error.hpp"

namespace barymorph {

namespace {

const double kMaxTriangleResolution = std::sqrt(3.0) / 2.0;

}  // namespace

EadesGarvanInstance eades_garvan(std::size_t n, double lambda, double r) {
    if (n < 5) throw Error(ErrorKind::ParameterOutOfRange, fmt::format("n = {} < 5", n));
    if (!(lambda > 0.0 && lambda <= 0.25))
        throw Error(ErrorKind::ParameterOutOfRange, fmt::format("lambda = {} outside (0, 1/4]", lambda));
    if (!(r > 0.0 && r <= kMaxTriangleResolution))
        throw Error(ErrorKind::ParameterOutOfRange, fmt::format("r = {} outside (0, sqrt(3)/2]", r));

    using I = EadesGarvanInstance;
    const std::size_t last = n - 3;
    std::vector<Face> faces;
    faces.reserve(2 * n - 5);
    for (std::size_t i = 0; i < last; ++i) {
        faces.push_back({I::u, I::chain(i + 1), I::chain(i)});
        faces.push_back({I::v, I::chain(i), I::chain(i + 1)});
    }
    faces.push_back({I::u, I::v, I::chain(last)});
    auto graph = std::make_shared<const PlaneGraph>(PlaneGraph::build(n, faces, {I::u, I::v, I::z}));

    CoefficientMatrix m(graph);
    for (std::size_t i = 1; i <= last; ++i) {
        const Vertex vi = I::chain(i);
        m.set(vi, I::chain(i - 1), lambda);
        if (i < last) {
            m.set(vi, I::chain(i + 1), lambda);
            m.set(vi, I::u, 0.5 - lambda);
            m.set(vi, I::v, 0.5 - lambda);
        } else {
            m.set(vi, I::u, 0.5 - lambda / 2.0);
            m.set(vi, I::v, 0.5 - lambda / 2.0);
        }
    }
    Triangle outer = Triangle::make({0.0, 0.5}, {0.0, -0.5}, {r, 0.0});
    return {std::move(graph), std::move(m), outer, lambda, r};
}

std::vector<double> eg_chain_oracle(std::size_t n, double lambda, double r) {
    if (n < 5) throw Error(ErrorKind::ParameterOutOfRange, fmt::format("n = {} < 5", n));
    // Thomas algorithm on rows  x_i - lambda x_{i-1} - lambda x_{i+1} = [i == 1] lambda r,
    // last row  x_N - lambda x_{N-1} = 0.
    const std::size_t count = n - 3;
    std::vector<double> lower(count, -lambda), diag(count, 1.0), upper(count, -lambda), rhs(count, 0.0);
    lower[0] = 0.0;
    upper[count - 1] = 0.0;
    rhs[0] = lambda * r;

    std::vector<double> c(count), x(count);
    c[0] = upper[0] / diag[0];
    x[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < count; ++i) {
        const double denom = diag[i] - lower[i] * c[i - 1];
        c[i] = upper[i] / denom;
        x[i] = (rhs[i] - lower[i] * x[i - 1]) / denom;
    }
    for (std::size_t i = count - 1; i > 0; --i) x[i - 1] -= c[i - 1] * x[i];
    return x;
}

double eg_resolution_log_ceiling(std::size_t n, double lambda, double r) {
    return std::log(r) + static_cast<double>(n - 4) * std::log(lambda / (1.0 - lambda));
}

NestedTrianglesInstance nested_triangles(std::size_t n) {
    if (n < 6 || n % 3 != 0)
        throw Error(ErrorKind::ParameterOutOfRange, fmt::format("n = {} must be a multiple of 3 and at least 6", n));
    using I = NestedTrianglesInstance;
    const std::size_t k = n / 3;

    // Each ring is (u, v, z) counter-clockwise; the annulus between rings i
    // and i+1 splits into two triangles per side (a, b) of the ring.
    std::vector<Face> faces{{I::u(1), I::v(1), I::z(1)}};
    const std::array<Vertex (*)(std::size_t), 3> label{I::u, I::v, I::z};
    for (std::size_t i = 1; i < k; ++i)
        for (int s = 0; s < 3; ++s) {
            const auto a = label[s], b = label[(s + 1) % 3];
            faces.push_back({a(i), a(i + 1), b(i)});
            faces.push_back({a(i + 1), b(i + 1), b(i)});
        }
    auto graph = std::make_shared<const PlaneGraph>(PlaneGraph::build(n, faces, {I::u(k), I::v(k), I::z(k)}));

    auto slot = [](std::size_t i, std::size_t which) -> Point {
        const auto d = static_cast<double>(i);
        switch (which % 3) {
            case 0: return {0.0, d};  // top
            case 1: return {d, -d};   // right
            default: return {-d, -d}; // left
        }
    };
    std::vector<Point> p0(n), p1(n);
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t shift = (k - i) % 3;
        p0[I::z(i)] = slot(i, 0);
        p0[I::v(i)] = slot(i, 1);
        p0[I::u(i)] = slot(i, 2);
        p1[I::z(i)] = slot(i, 0 + shift);
        p1[I::v(i)] = slot(i, 1 + shift);
        p1[I::u(i)] = slot(i, 2 + shift);
    }
    return {graph, k, Drawing(graph, std::move(p0)), Drawing(graph, std::move(p1))};
}

double nested_resolution_log_ceiling(std::size_t k) {
    return std::log(kMaxTriangleResolution) + 0.5 * (static_cast<double>(k) - 2.0) * std::log(0.9375);
}

std::shared_ptr<const PlaneGraph> random_stacked_triangulation(std::size_t n, std::mt19937_64& rng) {
    if (n < 4) throw Error(ErrorKind::ParameterOutOfRange, "stacked triangulations need n >= 4");
    std::vector<Face> faces{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
    for (Vertex w = 4; w < n; ++w) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        const std::size_t fi = pick(rng);
        const Face f = faces[fi];
        faces[fi] = {f[0], f[1], w};
        faces.push_back({f[1], f[2], w});
        faces.push_back({f[2], f[0], w});
    }
    return std::make_shared<const PlaneGraph>(PlaneGraph::build(n, faces, {0, 1, 2}));
}

CoefficientMatrix random_coefficients(std::shared_ptr<const PlaneGraph> graph, std::mt19937_64& rng,
                                      double min_weight) {
    std::uniform_real_distribution<double> dist(min_weight, 1.0);
    CoefficientMatrix m(graph);
    for (Vertex v : graph->internal_vertices()) {
        const auto nb = graph->neighbors_ccw(v);
        std::vector<double> w(nb.size());
        double sum = 0.0;
        for (double& x : w) sum += (x = dist(rng));
        for (std::size_t i = 0; i < nb.size(); ++i) m.set(v, nb[i], w[i] / sum);
    }
    return m;
}

}  // namespace barymorph
