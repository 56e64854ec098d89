#pragma once

// Closed-form steady temperature in the two-material bar: u'' = 0 on each
// segment, continuous temperature and flux at the interface, u(0) = F and a
// convective (Robin) condition at x = L. The solution is affine on each
// segment:
//   u(x) = a + b·x  on [0, l]
//   u(x) = c + d·x  on (l, L]

#include "thermiface/domain.hpp"

namespace thermiface {

struct ProfileCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    // κ_A·κ_B + κ_A·h·L + (κ_B − κ_A)·h·l, shared denominator of b, c, d.
    double zeta = 0.0;
};

[[nodiscard]] ProfileCoefficients solve_coefficients(const BarSetup& setup);

class TemperatureProfile {
public:
    explicit TemperatureProfile(const BarSetup& setup);

    [[nodiscard]] const BarSetup& setup() const noexcept { return setup_; }
    [[nodiscard]] const ProfileCoefficients& coefficients() const noexcept { return coeffs_; }

    // Left branch is used at x == l. Throws OutOfDomain outside [0, L].
    [[nodiscard]] double operator()(double x) const;

private:
    BarSetup setup_;
    ProfileCoefficients coeffs_;
};

[[nodiscard]] double temperature_at(const TemperatureProfile& profile, double x);

/// Heat flux leaving the bar at x = L, q = −κ_B·u'(L). Positive for F > Ta.
[[nodiscard]] double boundary_flux(const BarSetup& setup);

} // namespace thermiface
