#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "barymorph/coefficients.hpp"
#include "barymorph/embedder.hpp"
#include "barymorph/geometry.hpp"

namespace barymorph {

/// Morph through the F-drawings of (1 - t) m0 + t m1 with a fixed outer
/// triangle. Every drawing along it is planar.
class FGMorph {
public:
    /// Throws `InvalidCoefficients` or `GraphMismatch`.
    FGMorph(CoefficientMatrix m0, CoefficientMatrix m1, Triangle outer);

    [[nodiscard]] const PlaneGraph& graph() const noexcept { return m0_.graph(); }
    [[nodiscard]] const CoefficientMatrix& m0() const noexcept { return m0_; }
    [[nodiscard]] const CoefficientMatrix& m1() const noexcept { return m1_; }
    [[nodiscard]] const Triangle& outer() const noexcept { return outer_; }
    [[nodiscard]] CoefficientMatrix coefficients_at(double t) const { return interpolate(m0_, m1_, t); }

private:
    CoefficientMatrix m0_;
    CoefficientMatrix m1_;
    Triangle outer_;
};

/// Recovers coefficients for both drawings and builds the morph between
/// them. Throws `OuterMismatch` when the outer triangles differ by more than
/// 1e-12 in any coordinate.
[[nodiscard]] FGMorph morph_between(const Drawing& from, const Drawing& to);

[[nodiscard]] Drawing morph_at(const FGMorph& m, double t);

struct MorphFloor {
    double t = 0.0;
    double lambda_min = 0.0;
    double log_floor = 0.0;  // natural log of the resolution lower bound
};

[[nodiscard]] MorphFloor morph_resolution_floor(const FGMorph& m, double t);

struct MorphCheckpoint {
    double t = 0.0;
    Drawing drawing;
};

/// Piecewise-linear morph: consecutive checkpoints are joined by linear
/// morphs. `step_radii[j]` is one third of the minimum separated distance of
/// checkpoint j, the per-coordinate motion allowed during step j.
struct MorphSchedule {
    std::vector<MorphCheckpoint> checkpoints;
    std::vector<double> step_radii;

    [[nodiscard]] std::size_t steps() const noexcept { return step_radii.size(); }
};

struct DiscretizeOptions {
    double min_step = 1e-9;
    double t_tolerance = 1e-12;
    int interior_samples = 9;
    Tolerance tolerance = Tolerance::from_env();
};

/// Greedy stepping along the morph: from each checkpoint, the farthest t
/// whose drawing stays within the checkpoint's radius coordinate-wise. Each
/// linear step is also sampled and verified planar. Throws `StepStalled` or
/// `PlanarityViolation`.
[[nodiscard]] MorphSchedule discretize_morph(const FGMorph& m, DiscretizeOptions opts = {});

struct ScheduleCheck {
    std::vector<std::string> problems;
    double worst_motion_ratio = 0.0;  // max over steps of motion / radius

    [[nodiscard]] bool ok() const noexcept { return problems.empty(); }
};

/// Recomputes every schedule invariant from scratch.
[[nodiscard]] ScheduleCheck validate_schedule(const FGMorph& m, const MorphSchedule& s, int interior_samples = 9,
                                              Tolerance tol = Tolerance::from_env());

/// Point of the morph's curve in R^{2N+1}: t followed by (x, y) of every
/// internal vertex in id order.
[[nodiscard]] std::vector<double> fg_curve_point(const FGMorph& m, double t);

struct CurveLength {
    double length = 0.0;
    double reference_scale = 0.0;  // D * N^3

    [[nodiscard]] double ratio() const noexcept { return length / reference_scale; }
};

/// Polyline length through `segments + 1` uniformly spaced curve points.
/// Doubling `segments` refines the polyline, so the estimate never shrinks.
[[nodiscard]] CurveLength fg_curve_length_estimate(const FGMorph& m, std::size_t segments);

}  // namespace barymorph
