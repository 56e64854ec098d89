#pragma once

// Elasticity of the interface estimate with respect to the flux datum,
// E(q) = (q/l)·∂l/∂q: the percentage change in l̂ per 1 % change in q̂.
//
//   E(q) = (F − Ta)·h·κ_B / (q·(κ_B + L·h) − h·κ_B·(F − Ta))
//
// E has a vertical asymptote at q* = h·κ_B·(F − Ta)/(κ_B + L·h), which is
// q_max when κ_A < κ_B and q_min when κ_A > κ_B. On the feasible interval
// E keeps the sign of κ_A − κ_B and is strictly decreasing.

#include "thermiface/domain.hpp"

namespace thermiface {

enum class ElasticitySign { Negative, Positive };

const char* to_string(ElasticitySign sign) noexcept;

struct ElasticityProfile {
    InverseSetup setup;
    double asymptote_q = 0.0;
    ElasticitySign sign_on_feasible_interval = ElasticitySign::Negative;
};

[[nodiscard]] ElasticityProfile elasticity_profile(const InverseSetup& setup);

/// Throws InfeasibleMeasurement outside (q_min, q_max) and AtAsymptote when
/// |denominator| < 1e-12·|numerator|.
[[nodiscard]] double elasticity(const InverseSetup& setup, double q);

[[nodiscard]] double asymptote_location(const InverseSetup& setup);

[[nodiscard]] ElasticitySign classify_sign(const InverseSetup& setup);

/// ∂E/∂q = −(F − Ta)·h·κ_B·(κ_B + L·h) / (q·(κ_B + L·h) − h·κ_B·(F − Ta))²
[[nodiscard]] double elasticity_derivative(const InverseSetup& setup, double q);

} // namespace thermiface
