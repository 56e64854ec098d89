#include "thermiface/experiments.hpp"

#include "thermiface/elasticity.hpp"
#include "thermiface/forward.hpp"
#include "thermiface/inverse.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace thermiface;

TEST(Experiments, ExampleSetups) {
    const BarSetup s = example_setup(2);
    EXPECT_EQ(s.length, 10.0);
    EXPECT_EQ(s.interface, 4.0);
    EXPECT_EQ(s.material_a.symbol, "Ag");
    EXPECT_EQ(s.material_b.symbol, "Pb");
    EXPECT_THROW((void)example_setup(4), Error);
}

TEST(Experiments, TableRowsSpotChecks) {
    const auto t1 = reproduce_table(1);
    ASSERT_EQ(t1.size(), 10u);
    EXPECT_EQ(t1[3].q_hat, 439.0);
    EXPECT_NEAR(t1[3].l_hat, 4.045, 1e-3);
    EXPECT_NEAR(t1[3].epsilon, 1.299, 1e-3);
    EXPECT_NEAR(t1[3].K, 0.045, 1e-3);

    const auto t2 = reproduce_table(2);
    EXPECT_EQ(t2[2].q_hat, 265.0);
    EXPECT_NEAR(t2[2].l_hat, 3.922, 1e-3);
    EXPECT_NEAR(t2[2].epsilon, 1.927, 1e-3);
    EXPECT_NEAR(t2[2].K, 0.078, 1e-3);

    const auto t3 = reproduce_table(3);
    EXPECT_EQ(t3[5].q_hat, 474.475);
    EXPECT_NEAR(t3[5].l_hat, 4.000, 1e-3);
    EXPECT_NEAR(t3[5].epsilon, 0.0, 1e-3);
    EXPECT_NEAR(t3[5].K, 0.0, 1e-3);
    for (const auto& row : t3) {
        EXPECT_GE(row.K, 0.0);
    }
}

TEST(Experiments, ProfileDataInsertsInterface) {
    const BarSetup s{1.0, 0.3, 100.0, 25.0, 10.0, {"Aluminium", "Al", 204.0}, {"Copper", "Cu", 386.0}};
    const auto pts = emit_profile_data(s, 11);
    ASSERT_EQ(pts.size(), 12u);
    EXPECT_EQ(pts.front().x, 0.0);
    EXPECT_EQ(pts.front().u, 100.0);
    EXPECT_EQ(pts.back().x, 1.0);
    std::size_t at_interface = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].x == 0.3) {
            ++at_interface;
        }
        if (i > 0) {
            EXPECT_LE(pts[i - 1].x, pts[i].x);
        }
    }
    EXPECT_GE(at_interface, 1u);
}

TEST(Experiments, ProfileDataLastPointExampleOne) {
    const auto pts = emit_profile_data(example_setup(1), 21);
    EXPECT_EQ(pts.back().x, 10.0);
    EXPECT_NEAR(pts.back().u, 69.03, 5e-3);
    EXPECT_THROW((void)emit_profile_data(example_setup(1), 1), Error);
}

TEST(Experiments, ElasticityDataSignsAndOrder) {
    for (int e = 1; e <= 3; ++e) {
        const InverseSetup s = without_interface(example_setup(e));
        const auto series = emit_elasticity_data(s, 200, 0.01);
        ASSERT_EQ(series.points.size(), 200u);
        EXPECT_EQ(series.omitted, 0u);
        for (std::size_t i = 0; i < series.points.size(); ++i) {
            EXPECT_EQ(series.points[i].E < 0.0, e == 1);
            if (i > 0) {
                EXPECT_LT(series.points[i].E, series.points[i - 1].E);
                EXPECT_GT(series.points[i].q, series.points[i - 1].q);
            }
        }
    }
    const InverseSetup s = without_interface(example_setup(1));
    EXPECT_THROW((void)emit_elasticity_data(s, 10, 0.0), Error);
    EXPECT_THROW((void)emit_elasticity_data(s, 10, 0.5), Error);
    EXPECT_THROW((void)emit_elasticity_data(s, 1, 0.1), Error);
}

TEST(Experiments, ZeroNoiseSweep) {
    const SweepResult r = noise_sweep(example_setup(1), 0.0, 100, 1);
    EXPECT_EQ(r.summary.feasible, 100u);
    EXPECT_LT(r.summary.max_abs_error, 1e-12);
    for (const auto& row : r.rows) {
        EXPECT_NEAR(row.l_hat, 4.0, 1e-12);
        EXPECT_EQ(row.K, 0.0);
    }
}

TEST(Experiments, SweepHasNoBoundViolations) {
    const SweepResult r = noise_sweep(example_setup(1), 4.0, 10000, 42);
    EXPECT_EQ(r.summary.bound_violations, 0u);
    EXPECT_EQ(r.summary.infeasible, 0u);
    EXPECT_GT(r.summary.max_abs_error, 0.0);
    EXPECT_LE(r.summary.max_abs_error, r.summary.max_K);
    for (const auto& row : r.rows) {
        EXPECT_LE(std::abs(row.q_hat - boundary_flux(example_setup(1))), 4.0);
    }
}

TEST(Experiments, SimilarConductivitiesGiveLargerBounds) {
    const SweepResult fe_cu = noise_sweep(example_setup(1), 4.0, 10000, 42);
    const SweepResult al_mg = noise_sweep(example_setup(3), 4.0, 10000, 42);
    EXPECT_EQ(al_mg.summary.bound_violations, 0u);
    EXPECT_GT(al_mg.summary.max_K, fe_cu.summary.max_K);
}

TEST(Experiments, SweepIsDeterministicAcrossThreadCounts) {
    const SweepResult a = noise_sweep(example_setup(2), 3.0, 5000, 99, {NoiseModel::Uniform, 1});
    const SweepResult b = noise_sweep(example_setup(2), 3.0, 5000, 99, {NoiseModel::Uniform, 7});
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].q_hat, b.rows[i].q_hat);
        EXPECT_EQ(a.rows[i].l_hat, b.rows[i].l_hat);
    }
    const SweepResult c = noise_sweep(example_setup(2), 3.0, 5000, 100);
    EXPECT_NE(a.rows[0].q_hat, c.rows[0].q_hat);
}

TEST(Experiments, TruncatedGaussianStaysInBand) {
    const SweepResult r = noise_sweep(example_setup(1), 5.0, 2000, 3, {NoiseModel::TruncatedGaussian, 2});
    const double q = boundary_flux(example_setup(1));
    for (const auto& row : r.rows) {
        EXPECT_LE(std::abs(row.q_hat - q), 5.0);
    }
    EXPECT_EQ(r.summary.bound_violations, 0u);
}

TEST(Experiments, InfeasibleDrawsAreCountedNotClamped) {
    // Al-Mg: q is 17.4 above q_min and 28.8 below q_max.
    const SweepResult r = noise_sweep(example_setup(3), 25.0, 4000, 5);
    EXPECT_GT(r.summary.infeasible, 0u);
    EXPECT_GT(r.summary.feasible, 0u);
    EXPECT_EQ(r.summary.infeasible + r.summary.feasible, 4000u);
    EXPECT_EQ(r.summary.bound_violations, 0u);
    const FeasibilityInterval iv = feasibility_interval(without_interface(example_setup(3)));
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.feasible, iv.contains(row.q_hat));
    }
}

TEST(Experiments, AllSamplesInfeasible) {
    // h = 1e-3 leaves a feasibility interval far narrower than ε.
    BarSetup s = example_setup(3);
    s.convection = 1e-3;
    const FeasibilityInterval iv = feasibility_interval(without_interface(s));
    try {
        (void)noise_sweep(s, 1e6 * iv.width(), 20, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AllSamplesInfeasible);
    }
}

TEST(Experiments, CsvFormats) {
    std::ostringstream os;
    write_table_csv(os, reproduce_table(1));
    EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "q_hat,l_hat,epsilon,K");
    EXPECT_NE(os.str().find("\n436,4.15122"), std::string::npos);

    std::ostringstream prof;
    write_profile_csv(prof, emit_profile_data(example_setup(1), 2));
    EXPECT_EQ(prof.str().substr(0, 10), "x,u\n0,100\n");

    std::ostringstream el;
    const InverseSetup inv = without_interface(example_setup(1));
    write_elasticity_csv(el, emit_elasticity_data(inv, 3, 0.1).points);
    EXPECT_EQ(el.str().substr(0, 4), "q,E\n");

    std::ostringstream sw;
    write_sweep_csv(sw, noise_sweep(example_setup(3), 25.0, 50, 5));
    const std::string text = sw.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "i,q_hat,l_hat,abs_error,K,feasible");
    EXPECT_NE(text.find(",,,0\n"), std::string::npos);
    EXPECT_NE(text.find(",1\n"), std::string::npos);
}

TEST(Experiments, CsvUsesShortestRoundTrip) {
    std::ostringstream os;
    const std::vector<ProfilePoint> pts{{0.1, 1.0 / 3.0}};
    write_profile_csv(os, pts);
    EXPECT_EQ(os.str(), "x,u\n0.1,0.3333333333333333\n");
}
