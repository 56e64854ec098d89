#include "thermiface/domain.hpp"

#include <sstream>

namespace thermiface {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::EqualConductivities: return "equal-conductivities";
    case ErrorKind::InfeasibleMeasurement: return "infeasible-measurement";
    case ErrorKind::NoiseSwampsSignal: return "noise-swamps-signal";
    case ErrorKind::AtAsymptote: return "at-asymptote";
    case ErrorKind::AllSamplesInfeasible: return "all-samples-infeasible";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

BarSetup InverseSetup::with_interface(double interface) const {
    return BarSetup{length, interface, source_temp, ambient_temp, convection, material_a, material_b};
}

InverseSetup without_interface(const BarSetup& setup) {
    return InverseSetup{setup.length, setup.source_temp, setup.ambient_temp, setup.convection,
                        setup.material_a, setup.material_b};
}

namespace {

[[noreturn]] void fail(Violation violation, const std::string& field, double value,
                       const std::string& what) {
    std::ostringstream os;
    os.precision(17);
    os << what << " (" << field << " = " << value << ")";
    throw ValidationError(violation, field, value, os.str());
}

void check_common(double length, double convection) {
    if (!(length > 0.0)) {
        fail(Violation::LengthNotPositive, "length", length, "bar length must be positive");
    }
    if (!(convection > 0.0)) {
        fail(Violation::ConvectionNotPositive, "convection", convection,
             "convection coefficient must be positive");
    }
}

void check_temperatures(double source, double ambient) {
    if (!(source > ambient)) {
        std::ostringstream os;
        os.precision(17);
        os << "source must exceed ambient (source_temp = " << source
           << ", ambient_temp = " << ambient << ")";
        throw ValidationError(Violation::SourceNotAboveAmbient, "source_temp", source, os.str());
    }
}

} // namespace

const Material& validate_material(const Material& material, const std::string& field) {
    if (!(material.kappa > 0.0)) {
        fail(Violation::ConductivityNotPositive, field + ".kappa", material.kappa,
             "thermal conductivity must be positive");
    }
    if (material.name.empty()) {
        throw ValidationError(Violation::MaterialNameEmpty, field + ".name", 0.0,
                              "material name must be non-empty (" + field + ")");
    }
    if (material.symbol.empty()) {
        throw ValidationError(Violation::MaterialSymbolEmpty, field + ".symbol", 0.0,
                              "material symbol must be non-empty (" + field + ")");
    }
    return material;
}

const BarSetup& validate_bar_setup(const BarSetup& setup) {
    check_common(setup.length, setup.convection);
    if (!(setup.interface > 0.0 && setup.interface < setup.length)) {
        fail(Violation::InterfaceNotInterior, "interface", setup.interface,
             "interface not strictly interior, need 0 < interface < length");
    }
    check_temperatures(setup.source_temp, setup.ambient_temp);
    validate_material(setup.material_a, "material_a");
    validate_material(setup.material_b, "material_b");
    return setup;
}

const InverseSetup& validate_inverse_setup(const InverseSetup& setup) {
    check_common(setup.length, setup.convection);
    check_temperatures(setup.source_temp, setup.ambient_temp);
    validate_material(setup.material_a, "material_a");
    validate_material(setup.material_b, "material_b");
    if (setup.material_a.kappa == setup.material_b.kappa) {
        std::ostringstream os;
        os.precision(17);
        os << "conductivities of material_a and material_b are equal (" << setup.material_a.kappa
           << "); the interface cannot be recovered from the flux";
        throw Error(ErrorKind::EqualConductivities, os.str());
    }
    return setup;
}

const FluxMeasurement& validate_measurement(const FluxMeasurement& measurement) {
    if (!(measurement.q_hat > 0.0)) {
        fail(Violation::FluxNotPositive, "q_hat", measurement.q_hat, "measured flux must be positive");
    }
    if (!(measurement.epsilon >= 0.0)) {
        fail(Violation::NoiseNegative, "epsilon", measurement.epsilon,
             "noise level must be non-negative");
    }
    return measurement;
}

} // namespace thermiface
