#include "thermiface/domain.hpp"

#include "thermiface/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace thermiface;

namespace {

BarSetup fe_cu() {
    return BarSetup{10.0, 4.0, 100.0, 25.0, 10.0, {"Iron", "Fe", 73.0}, {"Copper", "Cu", 386.0}};
}

Violation violation_of(const BarSetup& s) {
    try {
        validate_bar_setup(s);
    } catch (const ValidationError& e) {
        return e.violation();
    }
    ADD_FAILURE() << "expected a ValidationError";
    return Violation::LengthNotPositive;
}

} // namespace

TEST(Domain, ExampleOneIsValidAndReturnedUnchanged) {
    const BarSetup s = fe_cu();
    const BarSetup& out = validate_bar_setup(s);
    EXPECT_EQ(&out, &s);
    EXPECT_EQ(out.interface, 4.0);
    EXPECT_EQ(out.material_b.kappa, 386.0);
}

TEST(Domain, InterfaceAtZeroIsNotInterior) {
    BarSetup s = fe_cu();
    s.interface = 0.0;
    try {
        validate_bar_setup(s);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.violation(), Violation::InterfaceNotInterior);
        EXPECT_EQ(e.field(), "interface");
        EXPECT_EQ(e.value(), 0.0);
        EXPECT_NE(std::string(e.what()).find("interface not strictly interior"), std::string::npos);
    }
    s.interface = s.length;
    EXPECT_EQ(violation_of(s), Violation::InterfaceNotInterior);
}

TEST(Domain, SourceMustExceedAmbient) {
    BarSetup s = fe_cu();
    s.source_temp = 25.0;
    s.ambient_temp = 25.0;
    try {
        validate_bar_setup(s);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.violation(), Violation::SourceNotAboveAmbient);
        EXPECT_NE(std::string(e.what()).find("source must exceed ambient"), std::string::npos);
    }
}

TEST(Domain, NegativeTemperaturesAreFine) {
    BarSetup s = fe_cu();
    s.source_temp = -5.0;
    s.ambient_temp = -30.0;
    EXPECT_NO_THROW(validate_bar_setup(s));
}

TEST(Domain, FirstViolationWinsInFixedOrder) {
    BarSetup s = fe_cu();
    s.length = -1.0;
    s.convection = 0.0;
    s.interface = 50.0;
    s.source_temp = 0.0;
    s.material_a.kappa = -3.0;
    EXPECT_EQ(violation_of(s), Violation::LengthNotPositive);
    s.length = 10.0;
    EXPECT_EQ(violation_of(s), Violation::ConvectionNotPositive);
    s.convection = 10.0;
    EXPECT_EQ(violation_of(s), Violation::InterfaceNotInterior);
    s.interface = 4.0;
    EXPECT_EQ(violation_of(s), Violation::SourceNotAboveAmbient);
    s.source_temp = 100.0;
    EXPECT_EQ(violation_of(s), Violation::ConductivityNotPositive);
    s.material_a.kappa = 73.0;
    s.material_b.name.clear();
    EXPECT_EQ(violation_of(s), Violation::MaterialNameEmpty);
    s.material_b.name = "Copper";
    s.material_b.symbol.clear();
    EXPECT_EQ(violation_of(s), Violation::MaterialSymbolEmpty);
}

TEST(Domain, NanFailsValidation) {
    BarSetup s = fe_cu();
    s.convection = std::numeric_limits<double>::quiet_NaN();
    EXPECT_EQ(violation_of(s), Violation::ConvectionNotPositive);
}

TEST(Domain, ValidationDoesNotClamp) {
    BarSetup s = fe_cu();
    s.interface = 10.5;
    EXPECT_THROW(validate_bar_setup(s), ValidationError);
    EXPECT_EQ(s.interface, 10.5);
}

TEST(Domain, EqualConductivitiesAllowedForwardButNotInverse) {
    BarSetup s = fe_cu();
    s.material_b.kappa = s.material_a.kappa;
    EXPECT_NO_THROW(validate_bar_setup(s));
    try {
        validate_inverse_setup(without_interface(s));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EqualConductivities);
    }
    // Exact comparison only: nearly equal is legal.
    s.material_b.kappa = std::nextafter(s.material_a.kappa, 1e9);
    EXPECT_NO_THROW(validate_inverse_setup(without_interface(s)));
}

TEST(Domain, MeasurementInvariants) {
    EXPECT_NO_THROW(validate_measurement({440.0, 0.0}));
    EXPECT_THROW(validate_measurement({0.0, 1.0}), ValidationError);
    EXPECT_THROW(validate_measurement({440.0, -0.1}), ValidationError);
}

TEST(Domain, InverseRoundTripThroughWithInterface) {
    const BarSetup s = fe_cu();
    const BarSetup back = without_interface(s).with_interface(s.interface);
    EXPECT_EQ(back.length, s.length);
    EXPECT_EQ(back.interface, s.interface);
    EXPECT_EQ(back.material_a.symbol, "Fe");
    EXPECT_EQ(back.material_b.symbol, "Cu");
}

TEST(Domain, ExampleSetupsAreValid) {
    for (int e = 1; e <= 3; ++e) {
        EXPECT_NO_THROW(validate_bar_setup(example_setup(e)));
    }
}
