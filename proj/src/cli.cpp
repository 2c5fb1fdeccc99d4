#include "swm/cli.hpp"

#include "swm/basis.hpp"
#include "swm/io.hpp"
#include "swm/region.hpp"
#include "swm/scenarios.hpp"
#include "swm/solver.hpp"
#include "swm/spectral.hpp"
#include "swm/steady.hpp"
#include "swm/system_matrix.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace swm {

namespace {

/// Bad input detected after parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

ModelKind require_model(const std::string& name) {
    const auto m = parse_model(name);
    if (!m) throw UsageError("unknown model '" + name + "'; valid models: " + valid_model_list());
    return *m;
}

struct StateArgs {
    std::string model = "swme";
    int order = 0;
    double h = 1.0;
    double um = 0.0;
    std::vector<double> alpha;
    double g = 1.0;
    std::string vars = "p";

    void add_to(CLI::App* app, bool with_vars) {
        app->add_option("--model", model, "Model name")->required();
        app->add_option("--N", order, "Moment order (default: number of --a values)");
        app->add_option("--h", h, "Depth");
        app->add_option("--um", um, "Mean velocity");
        app->add_option("--a", alpha, "Moments alpha_1..alpha_k, comma separated")->delimiter(',');
        app->add_option("--g", g, "Gravity");
        if (with_vars) app->add_option("--vars", vars, "p (primitive) or c (convective)");
    }

    PrimitiveState state() const {
        const int n = order > 0 ? order : std::max<int>(1, static_cast<int>(alpha.size()));
        check_order(n);
        if (static_cast<int>(alpha.size()) > n) throw UsageError("more --a values than --N");
        std::vector<double> a = alpha;
        a.resize(static_cast<std::size_t>(n), 0.0);
        return PrimitiveState(h, um, a);
    }

    VariableSet variables() const {
        if (vars == "p" || vars == "primitive") return VariableSet::Primitive;
        if (vars == "c" || vars == "convective") return VariableSet::Convective;
        throw UsageError("--vars must be p or c");
    }
};

std::string status_label(HyperbolicityStatus s) {
    switch (s) {
        case HyperbolicityStatus::Hyperbolic: return "hyperbolic";
        case HyperbolicityStatus::Marginal: return "marginal";
        case HyperbolicityStatus::NonHyperbolic: return "non-hyperbolic";
    }
    return "non-hyperbolic";
}

void cmd_coeffs(int order, std::ostream& out) {
    const CoefficientTensors t(order);
    CsvWriter csv(out);
    csv.header({"tensor", "i", "j", "k", "value"});
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j)
            for (int k = 1; k <= order; ++k) {
                csv.row_begin();
                csv.field("A");
                csv.field(i);
                csv.field(j);
                csv.field(k);
                csv.field(t.A(i, j, k));
                csv.row_end();
            }
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j)
            for (int k = 1; k <= order; ++k) {
                csv.row_begin();
                csv.field("B");
                csv.field(i);
                csv.field(j);
                csv.field(k);
                csv.field(t.B(i, j, k));
                csv.row_end();
            }
    // D has two indices; k is reported as 0.
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j) {
            csv.row_begin();
            csv.field("D");
            csv.field(i);
            csv.field(j);
            csv.field(0);
            csv.field(t.D(i, j));
            csv.row_end();
        }
}

void cmd_matrix(const StateArgs& args, std::ostream& out) {
    const PrimitiveState up = args.state();
    const SystemMatrix a =
        build_system_matrix(require_model(args.model), args.variables(), up, CoefficientTensors(up.order()), args.g);
    CsvWriter csv(out);
    for (Eigen::Index r = 0; r < a.entries.rows(); ++r) {
        csv.row_begin();
        for (Eigen::Index c = 0; c < a.entries.cols(); ++c) csv.field(a(r, c));
        csv.row_end();
    }
}

void cmd_eigen(const StateArgs& args, std::ostream& out) {
    const PrimitiveState up = args.state();
    const ModelKind model = require_model(args.model);
    const SpectralReport rep =
        spectral_report(model, args.variables(), up, CoefficientTensors(up.order()), args.g);
    out << "# model=" << model_name(model) << " N=" << up.order()
        << " vars=" << (args.variables() == VariableSet::Primitive ? "primitive" : "convective") << '\n';
    out << "# hyperbolic=" << (rep.hyperbolic ? 1 : 0) << " status=" << status_label(rep.status)
        << " max_imag=" << format_number(rep.max_imag) << " spectral_radius=" << format_number(rep.spectral_radius)
        << " eigenvector_condition=" << format_number(rep.eigenvector_condition);
    if (rep.analytic_available) out << " analytic_mismatch=" << format_number(rep.analytic_mismatch);
    out << '\n';
    CsvWriter csv(out);
    csv.header({"re", "im"});
    for (const Complex& z : rep.eigenvalues) csv.row({z.real(), z.imag()});
}

struct RegionArgs {
    std::string model = "mhswme";
    int order = 2;
    std::vector<double> range{-6.0, 6.0};
    int resolution = 201;
    std::vector<int> axes;
    std::string out_file;
    bool serial = false;
};

void cmd_hypregion(const RegionArgs& args, std::ostream& out) {
    const ModelKind model = require_model(args.model);
    check_order(args.order);
    if (args.range.size() != 2 || !(args.range[1] > args.range[0])) throw UsageError("--range must be lo,hi with lo < hi");
    if (args.resolution < 1) throw UsageError("--res must be positive");
    std::vector<int> moments = args.axes;
    if (moments.empty()) {
        moments.push_back(1);
        if (args.order >= 2) moments.push_back(2);
    }
    std::vector<ScanAxis> axes;
    for (int m : moments) axes.push_back({m, args.range[0], args.range[1], args.resolution});
    const RegionRaster r = args.serial ? scan_hyperbolicity_region_serial(model, args.order, axes)
                                       : scan_hyperbolicity_region(model, args.order, axes);
    if (args.out_file.empty()) {
        write_region_csv(out, r);
    } else {
        std::ofstream f(args.out_file);
        if (!f) throw UsageError("cannot write " + args.out_file);
        write_region_csv(f, r);
        out << args.out_file << '\n';
    }
}

struct SteadyArgs {
    std::string model = "pmhswme";
    std::vector<double> froude;
    std::vector<double> ma;
};

void cmd_steady(const SteadyArgs& args, std::ostream& out) {
    const ModelKind model = require_model(args.model);
    if (!has_steady_law(model)) {
        throw UsageError(std::string(model_name(model)) + " has no analytic steady states (use swlme, phswme or pmhswme)");
    }
    std::vector<ConjugateDepths> results;
    std::size_t max_roots = 1;
    for (double fr : args.froude) {
        ReferenceState ref;
        ref.froude = std::abs(fr);
        ref.moment_numbers = args.ma;
        results.push_back(conjugate_depths(model, ref));
        max_roots = std::max(max_roots, results.back().roots.size());
    }
    std::vector<std::string> header{"fr"};
    for (std::size_t i = 0; i < args.ma.size(); ++i) header.push_back("ma" + std::to_string(i + 1));
    header.emplace_back("touches_trivial");
    for (std::size_t i = 0; i < max_roots; ++i) header.push_back("root" + std::to_string(i + 1));
    CsvWriter csv(out);
    csv.header(header);
    for (std::size_t r = 0; r < results.size(); ++r) {
        csv.row_begin();
        csv.field(std::abs(args.froude[r]));
        for (double m : args.ma) csv.field(m);
        csv.field(results[r].touches_trivial ? 1 : 0);
        for (std::size_t i = 0; i < max_roots; ++i) {
            if (i < results[r].roots.size()) csv.field(results[r].roots[i]);
            else csv.empty();
        }
        csv.row_end();
    }
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string run_label(ModelKind m, int n) { return std::string(model_name(m)) + "_N" + std::to_string(n); }

template <class Writer>
void write_file(const std::filesystem::path& dir, const std::string& name, RunManifest& manifest, Writer&& w) {
    const std::filesystem::path p = dir / name;
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    w(f);
    manifest.files.push_back(name);
}

struct ConfigArgs {
    std::string config;
    std::string out_dir;
};

RunManifest start_manifest(const std::string& command, const std::string& config_text) {
    RunManifest m;
    m.command = command;
    m.config_hash = fnv1a_hex(config_text);
    m.version = std::string(version());
    m.started = iso_timestamp(std::chrono::system_clock::now());
    return m;
}

void finish_manifest(RunManifest& m, const std::filesystem::path& dir, std::chrono::steady_clock::time_point t0) {
    m.finished = iso_timestamp(std::chrono::system_clock::now());
    m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    m.files.emplace_back("manifest.json");
    m.write(dir / "manifest.json");
}

int cmd_simulate(const ConfigArgs& args, std::ostream& out, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = read_text(args.config);
    const ScenarioConfig cfg = ScenarioConfig::from_json_text(text);
    const std::filesystem::path dir = resolve_output_dir(args.out_dir);
    std::filesystem::create_directories(dir);
    RunManifest manifest = start_manifest("simulate", text);

    bool any_failed = false;
    for (int n : cfg.orders) {
        for (ModelKind m : cfg.models) {
            const std::string label = run_label(m, n);
            try {
                const RunResult r = run(dam_break_init(cfg, n), cfg.solver_config(m, n));
                write_file(dir, "snapshot_" + label + ".csv", manifest,
                           [&](std::ostream& f) { write_snapshot_csv(f, r.field); });
                write_file(dir, "diagnostics_" + label + ".csv", manifest,
                           [&](std::ostream& f) { write_diagnostics_csv(f, r.diagnostics); });
                std::string note = r.hyperbolicity_warnings > 0
                                       ? std::to_string(r.hyperbolicity_warnings) + " steps with complex eigenvalues"
                                       : "";
                manifest.runs.push_back({label, "ok", note});
            } catch (const std::exception& e) {
                any_failed = true;
                manifest.runs.push_back({label, "failed", e.what()});
                err << label << ": " << e.what() << '\n';
            }
        }
    }
    finish_manifest(manifest, dir, t0);
    for (const auto& f : manifest.files) out << (dir / f).string() << '\n';
    return any_failed ? kExitNumerical : kExitOk;
}

int cmd_compare(const ConfigArgs& args, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = read_text(args.config);
    const ScenarioConfig cfg = ScenarioConfig::from_json_text(text);
    const std::filesystem::path dir = resolve_output_dir(args.out_dir);
    std::filesystem::create_directories(dir);
    RunManifest manifest = start_manifest("compare", text);

    const ComparisonResult result = run_comparison(cfg);
    write_file(dir, "errors.csv", manifest, [&](std::ostream& f) { write_comparison_csv(f, result); });
    write_file(dir, "runs.csv", manifest, [&](std::ostream& f) { write_runs_csv(f, result); });
    for (const auto& r : result.runs) {
        const std::string label = run_label(r.model, r.order);
        const bool ref_failed = r.model != ModelKind::SWME &&
                                result.find(ModelKind::SWME, r.order)->status != RunStatus::Ok;
        std::string status(status_name(r.status));
        if (r.status == RunStatus::Ok && ref_failed) status = "skipped-unstable";
        if (r.status != RunStatus::Ok && r.model == ModelKind::SWME) status = "skipped-unstable";
        manifest.runs.push_back({label, status, r.message});
        if (r.field) {
            write_file(dir, "snapshot_" + label + ".csv", manifest,
                       [&](std::ostream& f) { write_snapshot_csv(f, *r.field); });
        }
    }
    finish_manifest(manifest, dir, t0);
    write_comparison_csv(out, result);
    return kExitOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shallow water moment models: coefficients, spectra, steady states and simulations", "swm"};
    app.set_version_flag("--version", std::string(version()));
    // Long-only help: --h is the depth option.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    int coeff_order = 1;
    auto* coeffs = app.add_subcommand("coeffs", "Dump A_ijk, B_ijk and D_ij as CSV");
    coeffs->add_option("N", coeff_order, "Moment order")->required();

    StateArgs matrix_args;
    auto* matrix = app.add_subcommand("matrix", "Print the system matrix as CSV");
    matrix_args.add_to(matrix, true);

    StateArgs eigen_args;
    auto* eigen = app.add_subcommand("eigen", "Spectrum and hyperbolicity verdict");
    eigen_args.add_to(eigen, true);

    RegionArgs region_args;
    auto* region = app.add_subcommand("hypregion", "Hyperbolicity raster over scaled moments");
    region->add_option("--model", region_args.model, "Model name")->required();
    region->add_option("--N", region_args.order, "Moment order");
    region->add_option("--range", region_args.range, "lo,hi of alpha_i / sqrt(g h)")->delimiter(',');
    region->add_option("--res", region_args.resolution, "Samples per axis");
    region->add_option("--axes", region_args.axes, "Scanned moments, comma separated (default 1,2)")->delimiter(',');
    region->add_option("--out", region_args.out_file, "Write CSV to this file instead of stdout");
    region->add_flag("--serial", region_args.serial, "Use the single-threaded scan");

    SteadyArgs steady_args;
    auto* steady = app.add_subcommand("steady", "Conjugate depth ratios of the steady law");
    steady->add_option("--model", steady_args.model, "swlme, phswme or pmhswme")->required();
    steady->add_option("--fr", steady_args.froude, "Froude number(s)")->required()->delimiter(',');
    steady->add_option("--ma", steady_args.ma, "Moment numbers Ma_1..Ma_N")->delimiter(',');

    ConfigArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Run every model and order of a scenario");
    simulate->add_option("--config", sim_args.config, "Scenario JSON")->required();
    simulate->add_option("--out", sim_args.out_dir, "Output directory (default $SWM_OUTPUT_DIR or swm_output)");

    ConfigArgs cmp_args;
    auto* compare = app.add_subcommand("compare", "Relative errors of each model against SWME");
    compare->add_option("--config", cmp_args.config, "Scenario JSON")->required();
    compare->add_option("--out", cmp_args.out_dir, "Output directory (default $SWM_OUTPUT_DIR or swm_output)");

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*coeffs) cmd_coeffs(coeff_order, out);
        else if (*matrix) cmd_matrix(matrix_args, out);
        else if (*eigen) cmd_eigen(eigen_args, out);
        else if (*region) cmd_hypregion(region_args, out);
        else if (*steady) cmd_steady(steady_args, out);
        else if (*simulate) return cmd_simulate(sim_args, out, err);
        else if (*compare) return cmd_compare(cmp_args, out);
        return kExitOk;
    } catch (const DryStateError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // OrderOutOfRange, Unavailable
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace swm
