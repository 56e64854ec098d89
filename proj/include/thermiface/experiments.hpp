#pragma once

// Reproduction studies: the three worked examples (Fe-Cu, Ag-Pb, Al-Mg on a
// 10 m bar with the interface at 4 m), profile and elasticity series for
// plotting, and seeded Monte Carlo noise sweeps. CSV writers live here too.

#include "thermiface/domain.hpp"

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace thermiface {

// L = 10 m, l = 4 m, F = 100 °C, Ta = 25 °C, h = 10 W·m⁻²·°C⁻¹.
// example 1: Fe-Cu, 2: Ag-Pb, 3: Al-Mg. Throws Validation for other ids.
[[nodiscard]] BarSetup example_setup(int example);

// Measured-flux grid of the published table for the example.
[[nodiscard]] std::vector<double> table_grid(int example);

struct TableRow {
    double q_hat = 0.0;
    double l_hat = 0.0;
    double epsilon = 0.0; // |q_true − q_hat|
    double K = 0.0;
};

[[nodiscard]] std::vector<TableRow> reproduce_table(int example);

struct ProfilePoint {
    double x = 0.0;
    double u = 0.0;
};

/// n_points evenly spaced positions on [0, L] plus one extra sample at the
/// interface, in increasing x (n_points + 1 samples in total).
[[nodiscard]] std::vector<ProfilePoint> emit_profile_data(const BarSetup& setup, std::size_t n_points);

struct ElasticityPoint {
    double q = 0.0;
    double E = 0.0;
};

struct ElasticitySeries {
    std::vector<ElasticityPoint> points;
    std::size_t omitted = 0; // samples dropped next to the asymptote
};

/// Samples E on [q_min + margin·W, q_max − margin·W], W the interval width.
[[nodiscard]] ElasticitySeries emit_elasticity_data(const InverseSetup& setup, std::size_t n_points,
                                                    double margin);

enum class NoiseModel {
    Uniform,           // η ~ U[−ε, ε]
    TruncatedGaussian, // η ~ N(0, (ε/2)²) rejected to |η| ≤ ε
};

struct SweepOptions {
    NoiseModel noise = NoiseModel::Uniform;
    unsigned threads = 1;
};

struct SweepRow {
    std::size_t index = 0;
    double q_hat = 0.0;
    bool feasible = false;
    // Meaningful only when feasible.
    double l_hat = 0.0;
    double abs_error = 0.0;
    double K = 0.0;
};

struct SweepSummary {
    std::size_t feasible = 0;
    std::size_t infeasible = 0;
    double max_abs_error = 0.0;
    double max_K = 0.0;
    std::size_t bound_violations = 0;
};

struct SweepResult {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double epsilon = 0.0;
    std::vector<SweepRow> rows;
    SweepSummary summary;
};

/// Draws q̂_i = q + η_i around the true boundary flux, each sample from its
/// own generator seeded by (seed, i), so results do not depend on
/// options.threads. Infeasible draws are kept as rows with feasible = false.
/// Throws AllSamplesInfeasible when no draw is usable.
[[nodiscard]] SweepResult noise_sweep(const BarSetup& setup, double epsilon, std::size_t samples,
                                      std::uint64_t seed, const SweepOptions& options = {});

void write_profile_csv(std::ostream& out, std::span<const ProfilePoint> points);
void write_elasticity_csv(std::ostream& out, std::span<const ElasticityPoint> points);
void write_table_csv(std::ostream& out, std::span<const TableRow> rows);
void write_sweep_csv(std::ostream& out, const SweepResult& result);

} // namespace thermiface
