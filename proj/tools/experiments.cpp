#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "barymorph/embedder.hpp"
#include "barymorph/families.hpp"
#include "barymorph/morph.hpp"

namespace barymorph::experiments {

namespace {

DecayRow eg_row(std::size_t n, double lambda, double r) {
    const auto inst = eades_garvan(n, lambda, r);
    const Drawing d = f_drawing(inst.matrix, inst.outer);
    DecayRow row;
    row.n = n;
    row.lambda_min = inst.matrix.min_positive();
    row.r_delta = triangle_resolution(inst.outer);
    row.measured_log = separated_object_extremes(d).log_resolution();
    row.floor_log = resolution_log_floor(row.r_delta, row.lambda_min, n);
    row.ceiling_log = eg_resolution_log_ceiling(n, lambda, r);
    return row;
}

DecayRow nested_row(std::size_t n) {
    using I = NestedTrianglesInstance;
    const auto inst = nested_triangles(n);
    const FGMorph morph = morph_between(inst.gamma0, inst.gamma1);
    const CoefficientMatrix half_matrix = morph.coefficients_at(0.5);
    const Drawing half = f_drawing(half_matrix, morph.outer());

    DecayRow row;
    row.n = n;
    row.lambda_min = half_matrix.min_positive();
    row.r_delta = triangle_resolution(morph.outer());
    row.measured_log = separated_object_extremes(half).log_resolution();
    row.floor_log = resolution_log_floor(row.r_delta, row.lambda_min, n);
    if (inst.k >= 3) row.ceiling_log = nested_resolution_log_ceiling(inst.k);

    const auto e0 = separated_object_extremes(inst.gamma0);
    const auto e1 = separated_object_extremes(inst.gamma1);
    row.endpoint_min_dist = std::min(e0.min_dist, e1.min_dist);
    row.endpoint_resolution = std::min(e0.resolution, e1.resolution);

    for (std::size_t i = 2; i + 1 <= inst.k; ++i) {
        const double c = std::min({morph.m0().weight(I::u(i), I::u(i + 1)), morph.m0().weight(I::v(i), I::v(i + 1)),
                                   morph.m0().weight(I::z(i), I::z(i + 1)), morph.m1().weight(I::u(i), I::z(i + 1)),
                                   morph.m1().weight(I::z(i), I::v(i + 1)), morph.m1().weight(I::v(i), I::u(i + 1))});
        row.claim1_min = std::min(row.claim1_min.value_or(c), c);
        const double ratio = face_area(half, {I::u(i), I::v(i), I::z(i)}) /
                             face_area(half, {I::u(i + 1), I::v(i + 1), I::z(i + 1)});
        row.area_ratio_max = std::max(row.area_ratio_max.value_or(ratio), ratio);
    }
    return row;
}

}  // namespace

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    if (x.size() < 2) return 0.0;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

DecayReport run_decay(const DecayParams& p) {
    DecayReport rep;
    rep.family = p.family;
    rep.rows.resize(p.ns.size());
    std::vector<std::exception_ptr> errors(p.ns.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t j = next++; j < p.ns.size(); j = next++) {
            const auto start = std::chrono::steady_clock::now();
            try {
                rep.rows[j] = p.family == Family::eades_garvan ? eg_row(p.ns[j], p.lambda, p.r) : nested_row(p.ns[j]);
            } catch (...) {
                errors[j] = std::current_exception();
            }
            rep.rows[j].runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    const unsigned count = std::clamp<unsigned>(p.threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, p.ns.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<double> xs, ys;
    for (const auto& row : rep.rows) {
        xs.push_back(static_cast<double>(row.n));
        ys.push_back(row.measured_log / std::log(2.0));
    }
    rep.slope_log2_per_n = least_squares_slope(xs, ys);
    if (p.family == Family::nested && !rep.rows.empty()) {
        rep.fitted_c = rep.fitted_c_prime = INFINITY;
        for (const auto& row : rep.rows) {
            const auto n = static_cast<double>(row.n);
            rep.fitted_c = std::min(rep.fitted_c, n * row.endpoint_min_dist);
            rep.fitted_c_prime = std::min(rep.fitted_c_prime, n * n * row.endpoint_resolution);
        }
    }
    return rep;
}

std::string decay_csv(const DecayReport& report, bool with_timing) {
    std::string out = "n,lambda_min,r_delta,measured_resolution_log,theorem1_floor_log,family_ceiling_log,runtime_ms\n";
    for (const auto& row : report.rows) {
        const std::string ceiling = row.ceiling_log ? fmt::format("{:.12f}", *row.ceiling_log) : "N/A";
        out += fmt::format("{},{:.12f},{:.12f},{:.12f},{:.12f},{},{:.3f}\n", row.n, row.lambda_min, row.r_delta,
                           row.measured_log, row.floor_log, ceiling, with_timing ? row.runtime_ms : 0.0);
    }
    return out;
}

}  // namespace barymorph::experiments
