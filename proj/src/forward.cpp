#include "thermiface/forward.hpp"

#include <sstream>

namespace thermiface {

ProfileCoefficients solve_coefficients(const BarSetup& setup) {
    validate_bar_setup(setup);
    const double ka = setup.material_a.kappa;
    const double kb = setup.material_b.kappa;
    const double h = setup.convection;
    const double l = setup.interface;
    const double drop = setup.ambient_temp - setup.source_temp;

    ProfileCoefficients k;
    k.zeta = ka * kb + ka * h * setup.length + (kb - ka) * h * l;
    k.a = setup.source_temp;
    k.b = kb * h * drop / k.zeta;
    k.c = setup.source_temp + l * h * (kb - ka) * drop / k.zeta;
    k.d = ka * h * drop / k.zeta;
    return k;
}

TemperatureProfile::TemperatureProfile(const BarSetup& setup)
    : setup_(setup), coeffs_(solve_coefficients(setup)) {}

double TemperatureProfile::operator()(double x) const {
    if (!(x >= 0.0 && x <= setup_.length)) {
        std::ostringstream os;
        os.precision(17);
        os << "position " << x << " outside the bar [0, " << setup_.length << "]";
        throw Error(ErrorKind::OutOfDomain, os.str());
    }
    if (x <= setup_.interface) {
        return coeffs_.a + coeffs_.b * x;
    }
    return coeffs_.c + coeffs_.d * x;
}

double temperature_at(const TemperatureProfile& profile, double x) { return profile(x); }

double boundary_flux(const BarSetup& setup) {
    const ProfileCoefficients k = solve_coefficients(setup);
    return setup.material_b.kappa * setup.material_a.kappa * setup.convection *
           (setup.source_temp - setup.ambient_temp) / k.zeta;
}

} // namespace thermiface
