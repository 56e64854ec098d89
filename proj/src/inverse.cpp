#include "thermiface/inverse.hpp"

#include "thermiface/elasticity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace thermiface {

namespace {

std::string infeasible_message(double q_hat, const FeasibilityInterval& interval) {
    std::ostringstream os;
    os.precision(9);
    os << "measured flux " << q_hat << " W/m^2 outside the feasibility interval ("
       << interval.q_min << ", " << interval.q_max << ") W/m^2";
    return os.str();
}

double endpoint_flux(const InverseSetup& s, double kappa) {
    const double h = s.convection;
    return kappa * h * (s.source_temp - s.ambient_temp) / (s.length * h + kappa);
}

// κ_Aκ_B/|κ_B − κ_A| · (F − Ta)
double bound_scale(const InverseSetup& s) {
    const double ka = s.material_a.kappa;
    const double kb = s.material_b.kappa;
    return ka * kb / std::abs(kb - ka) * (s.source_temp - s.ambient_temp);
}

void require_feasible(const FeasibilityInterval& interval, double q) {
    if (!interval.contains(q)) {
        throw InfeasibleMeasurement(q, interval);
    }
}

} // namespace

InfeasibleMeasurement::InfeasibleMeasurement(double q_hat, FeasibilityInterval interval)
    : Error(ErrorKind::InfeasibleMeasurement, infeasible_message(q_hat, interval)),
      q_hat_(q_hat), interval_(interval) {}

FeasibilityInterval feasibility_interval(const InverseSetup& setup) {
    validate_inverse_setup(setup);
    const double k_min = std::min(setup.material_a.kappa, setup.material_b.kappa);
    const double k_max = std::max(setup.material_a.kappa, setup.material_b.kappa);
    return FeasibilityInterval{endpoint_flux(setup, k_min), endpoint_flux(setup, k_max)};
}

double estimate_interface(const InverseSetup& setup, const FluxMeasurement& m) {
    validate_measurement(m);
    require_feasible(feasibility_interval(setup), m.q_hat);

    const double ka = setup.material_a.kappa;
    const double kb = setup.material_b.kappa;
    return ka * kb / (kb - ka) *
           ((setup.source_temp - setup.ambient_temp) / m.q_hat - 1.0 / setup.convection -
            setup.length / kb);
}

double error_bound_exact(const InverseSetup& setup, double q_true, const FluxMeasurement& m) {
    validate_measurement(m);
    const FeasibilityInterval interval = feasibility_interval(setup);
    require_feasible(interval, q_true);
    require_feasible(interval, m.q_hat);
    return bound_scale(setup) / (q_true * m.q_hat) * m.epsilon;
}

double error_bound_practical(const InverseSetup& setup, const FluxMeasurement& m) {
    validate_measurement(m);
    const FeasibilityInterval interval = feasibility_interval(setup);
    require_feasible(interval, m.q_hat);

    const double low = m.q_hat - m.epsilon;
    const double high = m.q_hat + m.epsilon;
    if (low <= interval.q_min && high >= interval.q_max) {
        std::ostringstream os;
        os.precision(9);
        os << "noise band [" << low << ", " << high << "] W/m^2 covers the whole feasibility interval ("
           << interval.q_min << ", " << interval.q_max << ")";
        throw Error(ErrorKind::NoiseSwampsSignal, os.str());
    }
    // K grows as the true flux shrinks, so the worst admissible q is the
    // lowest one still inside the interval.
    const double worst_q = std::max(low, interval.q_min);
    return bound_scale(setup) / (m.q_hat * worst_q) * m.epsilon;
}

EstimateReport estimate(const InverseSetup& setup, const FluxMeasurement& m) {
    EstimateReport report;
    report.measurement = m;
    report.l_hat = estimate_interface(setup, m);
    report.interval = feasibility_interval(setup);
    report.error_bound_practical = error_bound_practical(setup, m);
    report.elasticity_at_measurement = elasticity(setup, m.q_hat);
    return report;
}

} // namespace thermiface
