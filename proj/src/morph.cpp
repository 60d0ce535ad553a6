#include "barymorph/morph.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "barymorph/error.hpp"

namespace barymorph {

FGMorph::FGMorph(CoefficientMatrix m0, CoefficientMatrix m1, Triangle outer)
    : m0_(std::move(m0)), m1_(std::move(m1)), outer_(outer) {
    if (m0_.graph_ptr() != m1_.graph_ptr() && !(m0_.graph() == m1_.graph()))
        throw Error(ErrorKind::GraphMismatch, "morph endpoints belong to different graphs");
    for (const auto* m : {&m0_, &m1_})
        if (const auto rep = validate_coefficients(*m); !rep.valid())
            throw Error(ErrorKind::InvalidCoefficients, rep.summary());
}

FGMorph morph_between(const Drawing& from, const Drawing& to) {
    if (from.graph_ptr() != to.graph_ptr() && !(from.graph() == to.graph()))
        throw Error(ErrorKind::GraphMismatch, "drawings of different graphs");
    const Triangle a = from.outer_triangle();
    const Triangle b = to.outer_triangle();
    const double slack = 1e-12 * std::max(1.0, from.scale());
    for (std::size_t i = 0; i < 3; ++i)
        if (std::abs(a[i].x - b[i].x) > slack || std::abs(a[i].y - b[i].y) > slack)
            throw Error(ErrorKind::OuterMismatch,
                        fmt::format("outer corner {} differs: ({}, {}) vs ({}, {})", i, a[i].x, a[i].y, b[i].x, b[i].y));
    auto r0 = recover_coefficients(from);
    auto r1 = recover_coefficients(to);
    return FGMorph(std::move(r0.matrix), std::move(r1.matrix), a);
}

Drawing morph_at(const FGMorph& m, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::ParameterOutOfRange, fmt::format("t = {} outside [0, 1]", t));
    return f_drawing(m.coefficients_at(t), m.outer());
}

MorphFloor morph_resolution_floor(const FGMorph& m, double t) {
    MorphFloor f;
    f.t = t;
    f.lambda_min = m.coefficients_at(t).min_positive();
    f.log_floor = resolution_log_floor(triangle_resolution(m.outer()), f.lambda_min, m.graph().vertex_count());
    return f;
}

namespace {

void check_linear_step(const Drawing& a, const Drawing& b, int samples, Tolerance tol, double t0, double t1) {
    for (int s = 1; s <= samples; ++s) {
        const double u = static_cast<double>(s) / (samples + 1);
        const auto rep = verify_planar_straight_line(lerp(a, b, u), tol);
        if (!rep.planar())
            throw Error(ErrorKind::PlanarityViolation,
                        fmt::format("linear step [{:.17g}, {:.17g}] at fraction {}: {}", t0, t1, u, rep.summary()));
    }
}

}  // namespace

MorphSchedule discretize_morph(const FGMorph& m, DiscretizeOptions opts) {
    if (!(opts.min_step > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "min_step must be positive");
    MorphSchedule sched;
    double t = 0.0;
    Drawing current = morph_at(m, 0.0);
    const Drawing last = morph_at(m, 1.0);
    sched.checkpoints.push_back({0.0, current});

    while (t < 1.0) {
        const double radius = separated_object_extremes(current).min_dist / 3.0;
        auto within = [&](const Drawing& d) { return max_coordinate_deviation(d, current) <= radius; };

        double next = 1.0;
        Drawing candidate = last;
        if (!within(last)) {
            double lo = t, hi = 1.0;
            std::optional<Drawing> best;
            while (hi - lo > opts.t_tolerance) {
                const double mid = 0.5 * (lo + hi);
                Drawing d = morph_at(m, mid);
                if (within(d)) {
                    lo = mid;
                    best = std::move(d);
                } else {
                    hi = mid;
                }
            }
            if (lo - t >= opts.min_step && best) {
                next = lo;
                candidate = std::move(*best);
            } else {
                next = std::min(1.0, t + opts.min_step);
                candidate = morph_at(m, next);
                if (!within(candidate))
                    throw Error(ErrorKind::StepStalled,
                                fmt::format("no admissible step of at least {} from t = {:.17g} (radius {:.3e})",
                                            opts.min_step, t, radius));
            }
        }
        check_linear_step(current, candidate, opts.interior_samples, opts.tolerance, t, next);
        sched.step_radii.push_back(radius);
        sched.checkpoints.push_back({next, candidate});
        current = std::move(candidate);
        t = next;
    }
    return sched;
}

ScheduleCheck validate_schedule(const FGMorph& m, const MorphSchedule& s, int interior_samples, Tolerance tol) {
    ScheduleCheck chk;
    const auto& cps = s.checkpoints;
    if (cps.size() < 2) {
        chk.problems.push_back("fewer than two checkpoints");
        return chk;
    }
    if (s.step_radii.size() + 1 != cps.size()) chk.problems.push_back("step radii do not match the step count");
    if (cps.front().t != 0.0) chk.problems.push_back("schedule does not start at t = 0");
    if (cps.back().t != 1.0) chk.problems.push_back("schedule does not end at t = 1");
    const double scale = cps.front().drawing.scale();
    for (std::size_t j = 0; j < cps.size(); ++j) {
        const auto& cp = cps[j];
        if (j > 0 && !(cp.t > cps[j - 1].t)) chk.problems.push_back(fmt::format("t not increasing at checkpoint {}", j));
        if (max_coordinate_deviation(cp.drawing, morph_at(m, cp.t)) > 1e-12 * scale)
            chk.problems.push_back(fmt::format("checkpoint {} is not the morph drawing at t = {:.17g}", j, cp.t));
        if (const auto rep = verify_planar_straight_line(cp.drawing, tol); !rep.planar())
            chk.problems.push_back(fmt::format("checkpoint {}: {}", j, rep.summary()));
    }
    for (std::size_t j = 0; j + 1 < cps.size(); ++j) {
        const double radius = separated_object_extremes(cps[j].drawing).min_dist / 3.0;
        const double motion = max_coordinate_deviation(cps[j].drawing, cps[j + 1].drawing);
        chk.worst_motion_ratio = std::max(chk.worst_motion_ratio, motion / radius);
        if (motion > radius + 1e-12)
            chk.problems.push_back(fmt::format("step {} moves {:.3e}, allowed {:.3e}", j, motion, radius));
        for (int k = 1; k <= interior_samples; ++k) {
            const double u = static_cast<double>(k) / (interior_samples + 1);
            if (const auto rep = verify_planar_straight_line(lerp(cps[j].drawing, cps[j + 1].drawing, u), tol);
                !rep.planar())
                chk.problems.push_back(fmt::format("step {} at fraction {}: {}", j, u, rep.summary()));
        }
    }
    return chk;
}

std::vector<double> fg_curve_point(const FGMorph& m, double t) {
    const Drawing d = morph_at(m, t);
    const auto internal = m.graph().internal_vertices();
    std::vector<double> z;
    z.reserve(1 + 2 * internal.size());
    z.push_back(t);
    for (Vertex v : internal) {
        z.push_back(d[v].x);
        z.push_back(d[v].y);
    }
    return z;
}

CurveLength fg_curve_length_estimate(const FGMorph& m, std::size_t segments) {
    if (segments < 2) throw Error(ErrorKind::ParameterOutOfRange, "need at least 2 segments");
    CurveLength out;
    const double n_internal = static_cast<double>(m.graph().internal_count());
    out.reference_scale = m.outer().longest_side() * n_internal * n_internal * n_internal;
    std::vector<double> prev = fg_curve_point(m, 0.0);
    for (std::size_t s = 1; s <= segments; ++s) {
        const double t = static_cast<double>(s) / static_cast<double>(segments);
        std::vector<double> cur = fg_curve_point(m, t);
        double sq = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i) sq += (cur[i] - prev[i]) * (cur[i] - prev[i]);
        out.length += std::sqrt(sq);
        prev = std::move(cur);
    }
    return out;
}

}  // namespace barymorph
