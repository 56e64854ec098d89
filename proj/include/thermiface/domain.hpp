#pragma once

// Core value types for the two-material bar. Units are SI throughout:
// lengths in m, temperatures in °C, conductivities in W·m⁻¹·°C⁻¹,
// convection coefficients in W·m⁻²·°C⁻¹, fluxes in W·m⁻².

#include "thermiface/error.hpp"

#include <string>

namespace thermiface {

struct Material {
    std::string name;
    std::string symbol;
    double kappa = 0.0;
};

// Material A occupies [0, interface], material B occupies [interface, length].
struct BarSetup {
    double length = 0.0;
    double interface = 0.0;
    double source_temp = 0.0;
    double ambient_temp = 0.0;
    double convection = 0.0;
    Material material_a;
    Material material_b;
};

// The bar with the interface position unknown.
struct InverseSetup {
    double length = 0.0;
    double source_temp = 0.0;
    double ambient_temp = 0.0;
    double convection = 0.0;
    Material material_a;
    Material material_b;

    [[nodiscard]] BarSetup with_interface(double interface) const;
};

[[nodiscard]] InverseSetup without_interface(const BarSetup& setup);

struct FluxMeasurement {
    double q_hat = 0.0;
    double epsilon = 0.0; // bound on |q - q_hat|
};

// Identifies which invariant a ValidationError refers to.
enum class Violation {
    LengthNotPositive,
    ConvectionNotPositive,
    InterfaceNotInterior,
    SourceNotAboveAmbient,
    ConductivityNotPositive,
    MaterialNameEmpty,
    MaterialSymbolEmpty,
    FluxNotPositive,
    NoiseNegative,
};

class ValidationError : public Error {
public:
    ValidationError(Violation violation, std::string field, double value, const std::string& message)
        : Error(ErrorKind::Validation, message),
          violation_(violation), field_(std::move(field)), value_(value) {}

    [[nodiscard]] Violation violation() const noexcept { return violation_; }
    [[nodiscard]] const std::string& field() const noexcept { return field_; }
    [[nodiscard]] double value() const noexcept { return value_; }

private:
    Violation violation_;
    std::string field_;
    double value_;
};

/// Checks are made in a fixed order (length, convection, interface,
/// temperatures, conductivities) and the first violation is thrown as a
/// ValidationError. Values are never modified; the argument is returned
/// as-is on success. NaN fails every check it reaches.
const Material& validate_material(const Material& material, const std::string& field = "material");
const BarSetup& validate_bar_setup(const BarSetup& setup);

/// Same order as validate_bar_setup minus the interface. Identical
/// conductivities (exact comparison) raise ErrorKind::EqualConductivities.
const InverseSetup& validate_inverse_setup(const InverseSetup& setup);

const FluxMeasurement& validate_measurement(const FluxMeasurement& measurement);

} // namespace thermiface
