#include "thermiface/elasticity.hpp"

#include "thermiface/inverse.hpp"

#include <cmath>
#include <sstream>

namespace thermiface {

namespace {

constexpr double asymptote_rel_tol = 1e-12;

struct Parts {
    double numerator;   // (F − Ta)·h·κ_B
    double slope;       // κ_B + L·h
    double denominator; // q·slope − numerator
};

Parts checked_parts(const InverseSetup& setup, double q) {
    const FeasibilityInterval interval = feasibility_interval(setup);
    if (!interval.contains(q)) {
        throw InfeasibleMeasurement(q, interval);
    }
    const double kb = setup.material_b.kappa;
    const double h = setup.convection;
    Parts p;
    p.numerator = (setup.source_temp - setup.ambient_temp) * h * kb;
    p.slope = kb + setup.length * h;
    p.denominator = q * p.slope - p.numerator;
    if (std::abs(p.denominator) < asymptote_rel_tol * std::abs(p.numerator)) {
        std::ostringstream os;
        os.precision(12);
        os << "flux " << q << " W/m^2 is at the elasticity asymptote " << p.numerator / p.slope;
        throw Error(ErrorKind::AtAsymptote, os.str());
    }
    return p;
}

} // namespace

const char* to_string(ElasticitySign sign) noexcept {
    return sign == ElasticitySign::Negative ? "negative" : "positive";
}

ElasticityProfile elasticity_profile(const InverseSetup& setup) {
    return ElasticityProfile{setup, asymptote_location(setup), classify_sign(setup)};
}

double elasticity(const InverseSetup& setup, double q) {
    const Parts p = checked_parts(setup, q);
    return p.numerator / p.denominator;
}

double asymptote_location(const InverseSetup& setup) {
    validate_inverse_setup(setup);
    const double kb = setup.material_b.kappa;
    const double h = setup.convection;
    return h * kb * (setup.source_temp - setup.ambient_temp) / (kb + setup.length * h);
}

ElasticitySign classify_sign(const InverseSetup& setup) {
    validate_inverse_setup(setup);
    return setup.material_a.kappa < setup.material_b.kappa ? ElasticitySign::Negative
                                                           : ElasticitySign::Positive;
}

double elasticity_derivative(const InverseSetup& setup, double q) {
    const Parts p = checked_parts(setup, q);
    return -p.numerator * p.slope / (p.denominator * p.denominator);
}

} // namespace thermiface
