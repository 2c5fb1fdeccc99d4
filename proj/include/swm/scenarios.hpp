#pragma once

#include "swm/field.hpp"
#include "swm/model.hpp"
#include "swm/solver.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace swm {

/// h = left for x <= x_jump, right otherwise (evaluated at cell centers).
struct DepthStep {
    double x_jump = 0.0;
    double left = 1.5;
    double right = 1.0;
};

struct ScenarioConfig {
    std::string name = "dambreak";
    double x_min = -1.0;
    double x_max = 1.0;
    int n_cells = 1000;
    double t_end = 0.2;
    TimeStepMode dt_mode = TimeStepMode::Cfl;
    double dt = 0.005;
    double cfl = 0.5;
    double g = 1.0;
    std::optional<Friction> friction = Friction{};
    Boundary boundary = Boundary::Outflow;
    double h_min = kDefaultDryDepth;
    DepthStep depth;
    /// u(zeta) = sum_k profile[k] zeta^k.
    std::vector<double> profile{0.0, 0.5};
    std::vector<ModelKind> models{kRegularizedModels.begin(), kRegularizedModels.end()};
    std::vector<int> orders{2, 3, 4};
    /// "h", "u_m", "a1", "a2", ...
    std::vector<std::string> variables{"h", "u_m", "a1", "a2"};

    /// Throws std::invalid_argument naming the offending key.
    static ScenarioConfig from_json_text(const std::string& text);
    static ScenarioConfig from_file(const std::filesystem::path& path);
    void validate() const;
    SolverConfig solver_config(ModelKind model, int order) const;
};

/// Cellwise depth step with the projected velocity profile.
Field1D dam_break_init(const ScenarioConfig& cfg, int order);

/// Column of a primitive-variable name: h -> 0, u_m -> 1, aI -> 1 + I.
/// Throws std::invalid_argument for unknown names.
int variable_index(const std::string& name);

struct RelativeError {
    double value = 0.0;
    /// Reference norm below 1e-10 sqrt(n_cells): value is the absolute L2 error.
    bool absolute = false;
};

/// ||q_a - q_b||_2 / ||q_b||_2 over cells in primitive variables; field_b is the reference.
RelativeError relative_error(const Field1D& field_a, const Field1D& field_b, int variable);

enum class RunStatus { Ok, Failed, SkippedUnstable };
std::string_view status_name(RunStatus s);

struct RunRecord {
    ModelKind model = ModelKind::SWME;
    int order = 1;
    RunStatus status = RunStatus::Ok;
    std::string message;
    long steps = 0;
    long hyperbolicity_warnings = 0;
    double max_imag = 0.0;
    std::optional<Field1D> field;
};

struct ComparisonRow {
    ModelKind model = ModelKind::HSWME;
    int order = 1;
    std::string variable;
    double error = 0.0;
    bool absolute = false;
    RunStatus status = RunStatus::Ok;
};

struct ComparisonResult {
    /// Every run including the SWME references, ordered by (order, model).
    std::vector<RunRecord> runs;
    /// (model, N, variable) rows for every non-SWME model, ordered by model, N, variable.
    std::vector<ComparisonRow> rows;

    const RunRecord* find(ModelKind model, int order) const;
    const ComparisonRow* find(ModelKind model, int order, const std::string& variable) const;
};

/// Runs SWME plus every configured model for every order. Runs are
/// independent and execute concurrently. A failed SWME run marks that order's
/// rows skipped-unstable; a failed model run marks its rows failed.
ComparisonResult run_comparison(const ScenarioConfig& cfg);

/// Header "model,N,variable,rel_error,absolute,status".
void write_comparison_csv(std::ostream& os, const ComparisonResult& result);
/// Header "model,N,status,steps,hyperbolicity_warnings,max_imag,message".
void write_runs_csv(std::ostream& os, const ComparisonResult& result);

}  // namespace swm
