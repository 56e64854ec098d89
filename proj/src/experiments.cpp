#include "thermiface/experiments.hpp"

#include "thermiface/elasticity.hpp"
#include "thermiface/forward.hpp"
#include "thermiface/inverse.hpp"
#include "thermiface/materials.hpp"
#include "thermiface/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

namespace thermiface {

namespace {

void require_example(int example) {
    if (example < 1 || example > 3) {
        throw Error(ErrorKind::Validation,
                    "example must be 1, 2 or 3 (got " + std::to_string(example) + ")");
    }
}

std::mt19937_64 sample_engine(std::uint64_t seed, std::size_t index) {
    const auto i = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    return std::mt19937_64(seq);
}

double draw_noise(std::mt19937_64& engine, double epsilon, NoiseModel model) {
    if (epsilon == 0.0) {
        return 0.0;
    }
    if (model == NoiseModel::Uniform) {
        return std::uniform_real_distribution<double>(-epsilon, epsilon)(engine);
    }
    std::normal_distribution<double> normal(0.0, 0.5 * epsilon);
    while (true) {
        const double eta = normal(engine);
        if (std::abs(eta) <= epsilon) {
            return eta;
        }
    }
}

} // namespace

BarSetup example_setup(int example) {
    require_example(example);
    static constexpr const char* pairs[3][2] = {{"Fe", "Cu"}, {"Ag", "Pb"}, {"Al", "Mg"}};
    const MaterialDb& db = builtin_materials();
    BarSetup s;
    s.length = 10.0;
    s.interface = 4.0;
    s.source_temp = 100.0;
    s.ambient_temp = 25.0;
    s.convection = 10.0;
    s.material_a = db.at(pairs[example - 1][0]);
    s.material_b = db.at(pairs[example - 1][1]);
    return s;
}

std::vector<double> table_grid(int example) {
    require_example(example);
    switch (example) {
    case 1: return {436, 437, 438, 439, 440.299, 441, 442, 443, 444, 445};
    case 2: return {263, 264, 265, 266, 266.927, 268, 269, 270, 271, 272};
    default: return {470, 471, 472, 473, 474, 474.475, 476, 477, 478, 479};
    }
}

std::vector<TableRow> reproduce_table(int example) {
    const BarSetup setup = example_setup(example);
    const InverseSetup inv = without_interface(setup);
    const double q_true = boundary_flux(setup);

    std::vector<TableRow> rows;
    for (const double q_hat : table_grid(example)) {
        const FluxMeasurement m{q_hat, std::abs(q_true - q_hat)};
        rows.push_back(TableRow{q_hat, estimate_interface(inv, m), m.epsilon,
                                error_bound_exact(inv, q_true, m)});
    }
    return rows;
}

std::vector<ProfilePoint> emit_profile_data(const BarSetup& setup, std::size_t n_points) {
    if (n_points < 2) {
        throw Error(ErrorKind::Validation, "profile needs at least 2 points");
    }
    const TemperatureProfile profile(setup);
    const double span = setup.length;
    std::vector<double> xs;
    xs.reserve(n_points + 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        xs.push_back(span * static_cast<double>(i) / static_cast<double>(n_points - 1));
    }
    xs.back() = span;
    xs.insert(std::upper_bound(xs.begin(), xs.end(), setup.interface), setup.interface);

    std::vector<ProfilePoint> out;
    out.reserve(xs.size());
    for (const double x : xs) {
        out.push_back({x, profile(x)});
    }
    return out;
}

ElasticitySeries emit_elasticity_data(const InverseSetup& setup, std::size_t n_points, double margin) {
    if (n_points < 2) {
        throw Error(ErrorKind::Validation, "elasticity series needs at least 2 points");
    }
    if (!(margin > 0.0 && margin < 0.5)) {
        throw Error(ErrorKind::Validation, "margin must lie in (0, 0.5)");
    }
    const FeasibilityInterval interval = feasibility_interval(setup);
    const double lo = interval.q_min + margin * interval.width();
    const double hi = interval.q_max - margin * interval.width();

    ElasticitySeries series;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n_points - 1);
        const double q = lo + (hi - lo) * t;
        try {
            series.points.push_back({q, elasticity(setup, q)});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::AtAsymptote) {
                throw;
            }
            ++series.omitted;
        }
    }
    return series;
}

SweepResult noise_sweep(const BarSetup& setup, double epsilon, std::size_t samples,
                        std::uint64_t seed, const SweepOptions& options) {
    validate_bar_setup(setup);
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::Validation, "noise level must be finite and non-negative");
    }
    if (samples < 1) {
        throw Error(ErrorKind::Validation, "sweep needs at least one sample");
    }
    const InverseSetup inv = without_interface(setup);
    const FeasibilityInterval interval = feasibility_interval(inv);
    const double q_true = boundary_flux(setup);
    if (!interval.contains(q_true)) {
        throw InfeasibleMeasurement(q_true, interval);
    }

    SweepResult result;
    result.seed = seed;
    result.samples = samples;
    result.epsilon = epsilon;
    result.rows.resize(samples);

    const auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto engine = sample_engine(seed, i);
            SweepRow& row = result.rows[i];
            row.index = i;
            row.q_hat = q_true + draw_noise(engine, epsilon, options.noise);
            row.feasible = interval.contains(row.q_hat);
            if (!row.feasible) {
                continue;
            }
            const FluxMeasurement m{row.q_hat, epsilon};
            row.l_hat = estimate_interface(inv, m);
            row.abs_error = std::abs(setup.interface - row.l_hat);
            row.K = error_bound_exact(inv, q_true, m);
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, samples);
    if (workers == 1) {
        run_range(0, samples);
    } else {
        const std::size_t chunk = (samples + workers - 1) / workers;
        std::vector<std::exception_ptr> failures((samples + chunk - 1) / chunk);
        {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w * chunk < samples; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        run_range(w * chunk, std::min(samples, (w + 1) * chunk));
                    } catch (...) {
                        failures[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
    }

    SweepSummary& s = result.summary;
    for (const SweepRow& row : result.rows) {
        if (!row.feasible) {
            ++s.infeasible;
            continue;
        }
        ++s.feasible;
        s.max_abs_error = std::max(s.max_abs_error, row.abs_error);
        s.max_K = std::max(s.max_K, row.K);
        if (row.abs_error > row.K) {
            ++s.bound_violations;
        }
    }
    if (s.feasible == 0) {
        throw Error(ErrorKind::AllSamplesInfeasible,
                    "all " + std::to_string(samples) + " noisy draws fall outside the feasibility interval");
    }
    return result;
}

void write_profile_csv(std::ostream& out, std::span<const ProfilePoint> points) {
    out << "x,u\n";
    for (const auto& p : points) {
        out << format_shortest(p.x) << ',' << format_shortest(p.u) << '\n';
    }
}

void write_elasticity_csv(std::ostream& out, std::span<const ElasticityPoint> points) {
    out << "q,E\n";
    for (const auto& p : points) {
        out << format_shortest(p.q) << ',' << format_shortest(p.E) << '\n';
    }
}

void write_table_csv(std::ostream& out, std::span<const TableRow> rows) {
    out << "q_hat,l_hat,epsilon,K\n";
    for (const auto& r : rows) {
        out << format_shortest(r.q_hat) << ',' << format_shortest(r.l_hat) << ','
            << format_shortest(r.epsilon) << ',' << format_shortest(r.K) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "i,q_hat,l_hat,abs_error,K,feasible\n";
    for (const auto& r : result.rows) {
        out << r.index << ',' << format_shortest(r.q_hat) << ',';
        if (r.feasible) {
            out << format_shortest(r.l_hat) << ',' << format_shortest(r.abs_error) << ','
                << format_shortest(r.K) << ",1\n";
        } else {
            out << ",,,0\n";
        }
    }
}

} // namespace thermiface
