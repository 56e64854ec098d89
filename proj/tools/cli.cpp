#include "cli.hpp"

#include "thermiface/elasticity.hpp"
#include "thermiface/experiments.hpp"
#include "thermiface/forward.hpp"
#include "thermiface/inverse.hpp"
#include "thermiface/materials.hpp"
#include "thermiface/numfmt.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace thermiface::cli {

namespace {

enum class Format { Text, Csv };

double to_number(const std::string& flag, const std::string& text) {
    const auto value = parse_double(text);
    if (!value) {
        throw Error(ErrorKind::Parse, "invalid number for " + flag + ": '" + text + "'");
    }
    return *value;
}

std::size_t to_count(const std::string& flag, const std::string& text) {
    const double value = to_number(flag, text);
    if (!(value >= 1.0) || value != std::floor(value) || value > 1e12) {
        throw Error(ErrorKind::Validation, flag + " must be a positive integer (got '" + text + "')");
    }
    return static_cast<std::size_t>(value);
}

struct MaterialFlags {
    std::string symbol;
    std::string kappa;
    CLI::Option* symbol_opt = nullptr;
    CLI::Option* kappa_opt = nullptr;
};

// Flags shared by every physics subcommand. Defaults reproduce the worked
// examples: 10 m bar, 100 °C source, 25 °C ambient, h = 10.
struct BarFlags {
    std::string length = "10";
    std::string source_temp = "100";
    std::string ambient_temp = "25";
    std::string convection = "10";
    std::string interface;
    MaterialFlags a;
    MaterialFlags b;
};

struct Common {
    std::string materials_file;
    std::string output;
    std::string format;
};

void add_material_flags(CLI::App* sub, MaterialFlags& m, const std::string& side) {
    m.symbol_opt = sub->add_option("--material-" + side, m.symbol,
                                   "Material " + side + " by symbol (see `materials`)")
                     ->type_name("SYMBOL");
    m.kappa_opt = sub->add_option("--kappa-" + side, m.kappa,
                                  "Material " + side + " conductivity, W/(m.C)")
                    ->type_name("NUM");
    m.symbol_opt->excludes(m.kappa_opt);
}

void add_bar_flags(CLI::App* sub, BarFlags& f, bool with_interface) {
    sub->add_option("--length", f.length, "Bar length L, m")->type_name("NUM")->capture_default_str();
    sub->add_option("--source-temp", f.source_temp, "Source temperature F, C")->type_name("NUM")->capture_default_str();
    sub->add_option("--ambient-temp", f.ambient_temp, "Ambient temperature Ta, C")->type_name("NUM")->capture_default_str();
    sub->add_option("--h", f.convection, "Convection coefficient h, W/(m2.C)")->type_name("NUM")->capture_default_str();
    if (with_interface) {
        sub->add_option("--interface", f.interface, "Interface position l, m")->type_name("NUM")->required();
    }
    add_material_flags(sub, f.a, "a");
    add_material_flags(sub, f.b, "b");
}

void add_common_flags(CLI::App* sub, Common& c) {
    sub->add_option("--materials-file", c.materials_file, "CSV with name,symbol,kappa");
    sub->add_option("--output", c.output, "Write results here instead of stdout");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
}

Material resolve_material(const MaterialFlags& m, const std::string& side, const MaterialDb& db) {
    if (!m.symbol.empty()) {
        return db.at(m.symbol);
    }
    if (!m.kappa.empty()) {
        return Material{"custom-" + side, "k" + side, to_number("--kappa-" + side, m.kappa)};
    }
    throw Error(ErrorKind::Validation,
                "material " + side + " not specified: use --material-" + side + " or --kappa-" + side);
}

InverseSetup to_inverse(const BarFlags& f, const MaterialDb& db) {
    InverseSetup s;
    s.length = to_number("--length", f.length);
    s.source_temp = to_number("--source-temp", f.source_temp);
    s.ambient_temp = to_number("--ambient-temp", f.ambient_temp);
    s.convection = to_number("--h", f.convection);
    s.material_a = resolve_material(f.a, "a", db);
    s.material_b = resolve_material(f.b, "b", db);
    return s;
}

BarSetup to_bar(const BarFlags& f, const MaterialDb& db) {
    return to_inverse(f, db).with_interface(to_number("--interface", f.interface));
}

class Report {
public:
    void line(const std::string& key, const std::string& value, const std::string& unit = "") {
        os_ << std::left << std::setw(24) << key << value;
        if (!unit.empty()) {
            os_ << ' ' << unit;
        }
        os_ << '\n';
    }
    void number(const std::string& key, double value, const std::string& unit = "") {
        line(key, format_sig6(value), unit);
    }

private:
    std::ostringstream os_;

    friend std::string str(const Report& r) { return r.os_.str(); }
};

std::string interval_text(const FeasibilityInterval& i) {
    return "(" + format_sig6(i.q_min) + ", " + format_sig6(i.q_max) + ")";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InfeasibleMeasurement:
    case ErrorKind::NoiseSwampsSignal:
    case ErrorKind::AtAsymptote:
    case ErrorKind::AllSamplesInfeasible:
        return InfeasibleFailure;
    case ErrorKind::Io:
        return IoFailure;
    case ErrorKind::Internal:
        return InternalFailure;
    default:
        return ValidationFailure;
    }
}

std::string table_label(int example) {
    const BarSetup s = example_setup(example);
    return "Example " + std::to_string(example) + " (" + s.material_a.symbol + "-" +
           s.material_b.symbol + ")";
}

} // namespace

int run(const std::vector<std::string>& args, Context ctx) {
    CLI::App app{"Two-material bar: steady heat transfer and interface estimation", "thermiface"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    BarFlags bar;
    Common common;

    // forward
    std::string points = "101";
    auto* forward = app.add_subcommand("forward", "Temperature profile samples (CSV x,u)");
    add_bar_flags(forward, bar, true);
    add_common_flags(forward, common);
    forward->add_option("--points", points, "Evenly spaced samples (interface added)")->type_name("NUM")->capture_default_str();

    auto* flux = app.add_subcommand("flux", "Heat flux at the right boundary");
    add_bar_flags(flux, bar, true);
    add_common_flags(flux, common);

    // estimate
    std::string q_hat;
    std::string noise = "0";
    std::string true_flux;
    auto* est = app.add_subcommand("estimate", "Estimate the interface from a measured flux");
    add_bar_flags(est, bar, false);
    add_common_flags(est, common);
    est->add_option("--flux", q_hat, "Measured flux q_hat, W/m2")->type_name("NUM")->required();
    est->add_option("--noise", noise, "Noise level epsilon, W/m2")->type_name("NUM")->capture_default_str();
    est->add_option("--true-flux", true_flux, "Known true flux; adds the exact error bound")->type_name("NUM");

    auto* feas = app.add_subcommand("feasibility", "Open flux interval (q_min, q_max)");
    add_bar_flags(feas, bar, false);
    add_common_flags(feas, common);

    // elasticity
    std::string e_flux;
    std::string margin = "0.01";
    auto* elas = app.add_subcommand("elasticity", "Elasticity at one flux or over the interval");
    add_bar_flags(elas, bar, false);
    add_common_flags(elas, common);
    elas->add_option("--flux", e_flux, "Evaluate at this flux instead of emitting a curve")->type_name("NUM");
    elas->add_option("--points", points, "Curve samples")->type_name("NUM")->capture_default_str();
    elas->add_option("--margin", margin, "Fraction of the interval trimmed at each end")->type_name("NUM")->capture_default_str();

    std::string example = "all";
    auto* tables = app.add_subcommand("tables", "Reproduce the worked-example tables");
    add_common_flags(tables, common);
    tables->add_option("--example", example, "1, 2, 3 or all")
        ->check(CLI::IsMember({"1", "2", "3", "all"}))
        ->capture_default_str();

    // sweep
    std::string samples = "1000";
    std::uint64_t seed = 0;
    std::string noise_model = "uniform";
    unsigned threads = 1;
    auto* sweep = app.add_subcommand("sweep", "Seeded Monte Carlo noise sweep");
    add_bar_flags(sweep, bar, true);
    add_common_flags(sweep, common);
    sweep->add_option("--noise", noise, "Noise level epsilon, W/m2")->type_name("NUM")->required();
    sweep->add_option("--samples", samples, "Number of draws")->type_name("NUM")->capture_default_str();
    sweep->add_option("--seed", seed, "Generator seed")->capture_default_str();
    sweep->add_option("--noise-model", noise_model, "uniform or truncated-gaussian")
        ->check(CLI::IsMember({"uniform", "truncated-gaussian"}))
        ->capture_default_str();
    sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* mats = app.add_subcommand("materials", "List the material database");
    add_common_flags(mats, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        ctx.out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp& e) {
        ctx.out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& e) {
        ctx.err << "error: " << e.what() << '\n';
        return ValidationFailure;
    }

    try {
        MaterialDb db = builtin_materials();
        if (!common.materials_file.empty()) {
            db = load_materials(common.materials_file);
        } else if (ctx.materials_env) {
            db = load_materials(*ctx.materials_env);
        }

        const auto format_or = [&](Format fallback) {
            if (common.format.empty()) {
                return fallback;
            }
            return common.format == "csv" ? Format::Csv : Format::Text;
        };

        std::ostringstream body;
        if (forward->parsed()) {
            const BarSetup setup = to_bar(bar, db);
            const auto n = to_count("--points", points);
            const auto data = emit_profile_data(setup, n);
            if (format_or(Format::Csv) == Format::Csv) {
                write_profile_csv(body, data);
            } else {
                for (const auto& p : data) {
                    body << std::right << std::setw(14) << format_sig6(p.x) << std::setw(14)
                         << format_sig6(p.u) << '\n';
                }
            }
        } else if (flux->parsed()) {
            const double q = boundary_flux(to_bar(bar, db));
            if (format_or(Format::Text) == Format::Csv) {
                body << "q\n" << format_shortest(q) << '\n';
            } else {
                Report r;
                r.number("q", q, "W/m^2");
                body << str(r);
            }
        } else if (est->parsed()) {
            const InverseSetup setup = to_inverse(bar, db);
            const FluxMeasurement m{to_number("--flux", q_hat), to_number("--noise", noise)};
            const EstimateReport report = estimate(setup, m);
            std::optional<double> exact;
            if (!true_flux.empty()) {
                exact = error_bound_exact(setup, to_number("--true-flux", true_flux), m);
            }
            if (format_or(Format::Text) == Format::Csv) {
                body << "l_hat,q_hat,epsilon,q_min,q_max,K_practical,elasticity";
                body << (exact ? ",K_exact\n" : "\n");
                body << format_shortest(report.l_hat) << ',' << format_shortest(m.q_hat) << ','
                     << format_shortest(m.epsilon) << ',' << format_shortest(report.interval.q_min)
                     << ',' << format_shortest(report.interval.q_max) << ','
                     << format_shortest(report.error_bound_practical) << ','
                     << format_shortest(report.elasticity_at_measurement);
                if (exact) {
                    body << ',' << format_shortest(*exact);
                }
                body << '\n';
            } else {
                Report r;
                r.number("l_hat", report.l_hat, "m");
                r.number("q_hat", m.q_hat, "W/m^2");
                r.number("epsilon", m.epsilon, "W/m^2");
                r.line("feasibility_interval", interval_text(report.interval), "W/m^2");
                r.number("error_bound_practical", report.error_bound_practical, "m");
                if (exact) {
                    r.number("error_bound_exact", *exact, "m");
                }
                r.number("elasticity", report.elasticity_at_measurement);
                body << str(r);
            }
        } else if (feas->parsed()) {
            const FeasibilityInterval i = feasibility_interval(to_inverse(bar, db));
            if (format_or(Format::Text) == Format::Csv) {
                body << "q_min,q_max\n" << format_shortest(i.q_min) << ',' << format_shortest(i.q_max) << '\n';
            } else {
                Report r;
                r.number("q_min", i.q_min, "W/m^2");
                r.number("q_max", i.q_max, "W/m^2");
                body << str(r);
            }
        } else if (elas->parsed()) {
            const InverseSetup setup = to_inverse(bar, db);
            if (!e_flux.empty()) {
                const double q = to_number("--flux", e_flux);
                const double e = elasticity(setup, q);
                const double de = elasticity_derivative(setup, q);
                if (format_or(Format::Text) == Format::Csv) {
                    body << "q,E,dE_dq\n" << format_shortest(q) << ',' << format_shortest(e) << ','
                         << format_shortest(de) << '\n';
                } else {
                    Report r;
                    r.number("q", q, "W/m^2");
                    r.number("elasticity", e);
                    r.number("derivative", de, "m^2/W");
                    r.number("asymptote", asymptote_location(setup), "W/m^2");
                    r.line("sign", to_string(classify_sign(setup)));
                    body << str(r);
                }
            } else {
                const auto n = to_count("--points", points);
                const auto series = emit_elasticity_data(setup, n, to_number("--margin", margin));
                if (series.omitted > 0) {
                    ctx.err << "omitted " << series.omitted << " samples at the asymptote\n";
                }
                if (format_or(Format::Csv) == Format::Csv) {
                    write_elasticity_csv(body, series.points);
                } else {
                    for (const auto& p : series.points) {
                        body << std::right << std::setw(14) << format_sig6(p.q) << std::setw(14)
                             << format_sig6(p.E) << '\n';
                    }
                }
            }
        } else if (tables->parsed()) {
            std::vector<int> which;
            if (example == "all") {
                which = {1, 2, 3};
            } else {
                which = {std::stoi(example)};
            }
            const bool csv = format_or(Format::Text) == Format::Csv;
            for (std::size_t k = 0; k < which.size(); ++k) {
                const auto rows = reproduce_table(which[k]);
                if (k > 0) {
                    body << '\n';
                }
                if (csv) {
                    write_table_csv(body, rows);
                    continue;
                }
                body << table_label(which[k]) << '\n';
                body << std::right << std::setw(10) << "q_hat" << std::setw(10) << "l_hat"
                     << std::setw(10) << "epsilon" << std::setw(10) << "K" << '\n';
                for (const auto& row : rows) {
                    body << std::setw(10) << format_fixed(row.q_hat, 3) << std::setw(10)
                         << format_fixed(row.l_hat, 3) << std::setw(10)
                         << format_fixed(row.epsilon, 3) << std::setw(10) << format_fixed(row.K, 3)
                         << '\n';
                }
            }
        } else if (sweep->parsed()) {
            const BarSetup setup = to_bar(bar, db);
            SweepOptions options;
            options.noise = noise_model == "uniform" ? NoiseModel::Uniform : NoiseModel::TruncatedGaussian;
            options.threads = threads;
            const SweepResult result = noise_sweep(setup, to_number("--noise", noise),
                                                   to_count("--samples", samples), seed, options);
            Report r;
            r.line("seed", std::to_string(result.seed));
            r.line("samples", std::to_string(result.samples));
            r.number("epsilon", result.epsilon, "W/m^2");
            r.line("feasible", std::to_string(result.summary.feasible));
            r.line("infeasible", std::to_string(result.summary.infeasible));
            r.number("max_abs_error", result.summary.max_abs_error, "m");
            r.number("max_K", result.summary.max_K, "m");
            r.line("bound_violations", std::to_string(result.summary.bound_violations));
            if (format_or(Format::Csv) == Format::Csv) {
                write_sweep_csv(body, result);
                ctx.err << str(r);
            } else {
                body << str(r);
            }
        } else if (mats->parsed()) {
            if (format_or(Format::Text) == Format::Csv) {
                body << "name,symbol,kappa\n";
                for (const auto& m : db.entries()) {
                    body << m.name << ',' << m.symbol << ',' << format_shortest(m.kappa) << '\n';
                }
            } else {
                for (const auto& m : db.entries()) {
                    body << std::left << std::setw(16) << m.name << std::setw(8) << m.symbol
                         << format_sig6(m.kappa) << '\n';
                }
            }
        }

        if (common.output.empty()) {
            ctx.out << body.str();
        } else {
            std::ofstream file(common.output, std::ios::binary);
            file << body.str();
            if (!file) {
                throw Error(ErrorKind::Io, "cannot write output file '" + common.output + "'");
            }
        }
        return Success;
    } catch (const Error& e) {
        ctx.err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        ctx.err << "internal error: " << e.what() << '\n';
        return InternalFailure;
    }
}

} // namespace thermiface::cli
