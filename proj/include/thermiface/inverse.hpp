#pragma once

// Recovery of the interface position from one flux reading at x = L.
//
// Inverting the boundary flux gives
//   l̂ = κ_Aκ_B/(κ_B − κ_A) · ((F − Ta)/q̂ − 1/h − L/κ_B),
// which is strictly interior exactly when q̂ lies in the open interval
// (q_m, q_M), q_* = κ_*·h·(F − Ta)/(L·h + κ_*) with κ_m = min(κ_A, κ_B)
// and κ_M = max(κ_A, κ_B).

#include "thermiface/domain.hpp"

#include <string>

namespace thermiface {

struct FeasibilityInterval {
    double q_min = 0.0; // open lower end, maps to κ_m
    double q_max = 0.0; // open upper end, maps to κ_M

    [[nodiscard]] bool contains(double q) const noexcept { return q > q_min && q < q_max; }
    [[nodiscard]] double width() const noexcept { return q_max - q_min; }
};

class InfeasibleMeasurement : public Error {
public:
    InfeasibleMeasurement(double q_hat, FeasibilityInterval interval);

    [[nodiscard]] double q_hat() const noexcept { return q_hat_; }
    [[nodiscard]] const FeasibilityInterval& interval() const noexcept { return interval_; }

private:
    double q_hat_;
    FeasibilityInterval interval_;
};

struct EstimateReport {
    double l_hat = 0.0;
    FluxMeasurement measurement;
    FeasibilityInterval interval;
    double error_bound_practical = 0.0;
    double elasticity_at_measurement = 0.0;
};

[[nodiscard]] FeasibilityInterval feasibility_interval(const InverseSetup& setup);

/// Throws InfeasibleMeasurement unless q_min < q̂ < q_max; the endpoints
/// themselves are rejected.
[[nodiscard]] double estimate_interface(const InverseSetup& setup, const FluxMeasurement& m);

/// |l − l̂| ≤ K given the true flux:
///   K = κ_Aκ_B/|κ_B − κ_A| · (F − Ta)/(q·q̂) · ε.
[[nodiscard]] double error_bound_exact(const InverseSetup& setup, double q_true,
                                       const FluxMeasurement& m);

/// Worst case of error_bound_exact over admissible true fluxes
/// [q̂ − ε, q̂ + ε] ∩ (q_min, q_max). Throws NoiseSwampsSignal when the noise
/// band covers the whole feasibility interval.
[[nodiscard]] double error_bound_practical(const InverseSetup& setup, const FluxMeasurement& m);

[[nodiscard]] EstimateReport estimate(const InverseSetup& setup, const FluxMeasurement& m);

} // namespace thermiface
