#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace barymorph::experiments {

enum class Family { eades_garvan, nested };

struct DecayRow {
    std::size_t n = 0;
    double lambda_min = 0.0;
    double r_delta = 0.0;
    double measured_log = 0.0;
    double floor_log = 0.0;
    std::optional<double> ceiling_log;
    double runtime_ms = 0.0;

    // nested only
    double endpoint_min_dist = 0.0;        // min over Gamma0, Gamma1
    double endpoint_resolution = 0.0;      // min over Gamma0, Gamma1
    std::optional<double> claim1_min;      // smallest spine / diagonal weight, rings 2..k-1
    std::optional<double> area_ratio_max;  // largest area(ring i) / area(ring i+1) at t = 0.5, rings 2..k-1

    [[nodiscard]] bool sandwich_holds(double slack = 1e-9) const noexcept {
        return measured_log >= floor_log - slack && (!ceiling_log || measured_log <= *ceiling_log + slack);
    }
};

struct DecayReport {
    Family family = Family::eades_garvan;
    std::vector<DecayRow> rows;
    double slope_log2_per_n = 0.0;  // least-squares slope of log2(resolution) against n
    double fitted_c = 0.0;          // nested: min over rows of n * endpoint_min_dist
    double fitted_c_prime = 0.0;    // nested: min over rows of n^2 * endpoint_resolution
};

struct DecayParams {
    Family family = Family::eades_garvan;
    std::vector<std::size_t> ns;
    double lambda = 0.25;
    double r = 0.8660254037844386;
    unsigned threads = 1;
};

/// One row per n, computed in parallel and returned in n order.
[[nodiscard]] DecayReport run_decay(const DecayParams& p);

[[nodiscard]] std::string decay_csv(const DecayReport& report, bool with_timing);

[[nodiscard]] double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace barymorph::experiments
