#include "swm/scenarios.hpp"

#include "swm/basis.hpp"
#include "swm/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace swm {

namespace {

using nlohmann::json;

template <class T>
T get(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config key '") + key + "': " + e.what());
    }
}

double evaluate_profile(const std::vector<double>& coeffs, double zeta) {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * zeta + *it;
    return v;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

    ScenarioConfig c;
    c.name = get<std::string>(j, "name", c.name);
    if (j.contains("domain")) {
        const auto d = get<std::vector<double>>(j, "domain", {});
        if (d.size() != 2) throw std::invalid_argument("config key 'domain' must be [x_min, x_max]");
        c.x_min = d[0];
        c.x_max = d[1];
    }
    c.n_cells = get<int>(j, "n_cells", c.n_cells);
    c.t_end = get<double>(j, "t_end", c.t_end);
    c.g = get<double>(j, "g", c.g);
    c.h_min = get<double>(j, "h_min", c.h_min);

    if (j.contains("time_step")) {
        const json& ts = j.at("time_step");
        const auto mode = get<std::string>(ts, "mode", "cfl");
        if (mode == "cfl") {
            c.dt_mode = TimeStepMode::Cfl;
            c.cfl = get<double>(ts, "cfl", c.cfl);
        } else if (mode == "fixed") {
            c.dt_mode = TimeStepMode::Fixed;
            c.dt = get<double>(ts, "dt", c.dt);
        } else {
            throw std::invalid_argument("config key 'time_step.mode' must be 'cfl' or 'fixed'");
        }
    }
    if (j.contains("friction")) {
        const json& f = j.at("friction");
        if (f.is_null() || (f.is_boolean() && !f.get<bool>())) {
            c.friction.reset();
        } else {
            Friction fr;
            fr.viscosity = get<double>(f, "viscosity", fr.viscosity);
            fr.slip_length = get<double>(f, "slip_length", fr.slip_length);
            c.friction = fr;
        }
    }
    if (j.contains("boundary")) {
        const auto b = get<std::string>(j, "boundary", "outflow");
        if (b == "outflow") c.boundary = Boundary::Outflow;
        else if (b == "periodic") c.boundary = Boundary::Periodic;
        else throw std::invalid_argument("config key 'boundary' must be 'outflow' or 'periodic'");
    }
    if (j.contains("initial_depth")) {
        const json& d = j.at("initial_depth");
        c.depth.x_jump = get<double>(d, "x_jump", c.depth.x_jump);
        c.depth.left = get<double>(d, "left", c.depth.left);
        c.depth.right = get<double>(d, "right", c.depth.right);
    }
    c.profile = get<std::vector<double>>(j, "initial_profile", c.profile);
    if (j.contains("models")) {
        c.models.clear();
        for (const auto& name : get<std::vector<std::string>>(j, "models", {})) {
            const auto m = parse_model(name);
            if (!m) throw std::invalid_argument("unknown model '" + name + "'; valid models: " + valid_model_list());
            c.models.push_back(*m);
        }
    }
    c.orders = get<std::vector<int>>(j, "orders", c.orders);
    c.variables = get<std::vector<std::string>>(j, "variables", c.variables);
    c.validate();
    return c;
}

ScenarioConfig ScenarioConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return from_json_text(text.str());
}

void ScenarioConfig::validate() const {
    if (!(x_max > x_min)) throw std::invalid_argument("domain needs x_max > x_min");
    if (n_cells < 1) throw std::invalid_argument("n_cells must be positive");
    if (orders.empty()) throw std::invalid_argument("orders must not be empty");
    for (int n : orders) {
        if (n < 1 || n > kMaxOrder) {
            throw std::invalid_argument("config key 'orders': " + std::to_string(n) + " outside [1, " +
                                        std::to_string(kMaxOrder) + "]");
        }
    }
    if (!(std::min(depth.left, depth.right) >= h_min) || !(std::min(depth.left, depth.right) > 0.0)) {
        throw std::invalid_argument("initial depth must exceed h_min everywhere");
    }
    const int max_order = *std::max_element(orders.begin(), orders.end());
    if (static_cast<int>(profile.size()) - 1 > max_order) {
        throw std::invalid_argument("initial profile degree exceeds the largest order");
    }
    for (const auto& v : variables) variable_index(v);
    solver_config(ModelKind::SWME, orders.front()).validate();
}

SolverConfig ScenarioConfig::solver_config(ModelKind model, int order) const {
    SolverConfig s;
    s.model = model;
    s.order = order;
    s.g = g;
    s.t_end = t_end;
    s.dt_mode = dt_mode;
    s.dt = dt;
    s.cfl = cfl;
    s.friction = friction;
    s.h_min = h_min;
    return s;
}

Field1D dam_break_init(const ScenarioConfig& cfg, int order) {
    Field1D f(cfg.x_min, cfg.x_max, cfg.n_cells, order, cfg.boundary);
    const std::vector<double>& coeffs = cfg.profile;
    const ProjectedProfile p = project_profile([&coeffs](double z) { return evaluate_profile(coeffs, z); }, order);
    for (int i = 0; i < f.n_cells(); ++i) {
        const double h = f.x(i) <= cfg.depth.x_jump ? cfg.depth.left : cfg.depth.right;
        f.set(i, PrimitiveState(h, p.um, p.alpha));
    }
    return f;
}

int variable_index(const std::string& name) {
    if (name == "h") return 0;
    if (name == "u_m" || name == "um") return 1;
    if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'A')) {
        try {
            std::size_t used = 0;
            const int i = std::stoi(name.substr(1), &used);
            if (used == name.size() - 1 && i >= 1 && i <= kMaxOrder) return 1 + i;
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("unknown variable '" + name + "' (use h, u_m, a1, a2, ...)");
}

RelativeError relative_error(const Field1D& field_a, const Field1D& field_b, int variable) {
    if (field_a.n_cells() != field_b.n_cells() || field_a.x_min() != field_b.x_min() ||
        field_a.x_max() != field_b.x_max()) {
        throw std::invalid_argument("relative error needs identical grids");
    }
    if (variable < 0 || variable >= std::min(field_a.n_vars(), field_b.n_vars())) {
        throw std::invalid_argument("variable index outside both fields");
    }
    double diff = 0.0, ref = 0.0;
    for (int i = 0; i < field_a.n_cells(); ++i) {
        const double a = field_a.primitive(i, 0.0).vector()[variable];
        const double b = field_b.primitive(i, 0.0).vector()[variable];
        diff += (a - b) * (a - b);
        ref += b * b;
    }
    RelativeError e;
    const double ref_norm = std::sqrt(ref);
    if (ref_norm < 1e-10 * std::sqrt(static_cast<double>(field_b.n_cells()))) {
        e.absolute = true;
        e.value = std::sqrt(diff);
    } else {
        e.value = std::sqrt(diff) / ref_norm;
    }
    return e;
}

std::string_view status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::Failed: return "failed";
        case RunStatus::SkippedUnstable: return "skipped-unstable";
    }
    return "failed";
}

const RunRecord* ComparisonResult::find(ModelKind model, int order) const {
    for (const auto& r : runs) {
        if (r.model == model && r.order == order) return &r;
    }
    return nullptr;
}

const ComparisonRow* ComparisonResult::find(ModelKind model, int order, const std::string& variable) const {
    for (const auto& r : rows) {
        if (r.model == model && r.order == order && r.variable == variable) return &r;
    }
    return nullptr;
}

ComparisonResult run_comparison(const ScenarioConfig& cfg) {
    cfg.validate();
    std::vector<ModelKind> models{ModelKind::SWME};
    for (ModelKind m : cfg.models) {
        if (std::find(models.begin(), models.end(), m) == models.end()) models.push_back(m);
    }

    ComparisonResult result;
    for (int n : cfg.orders) {
        for (ModelKind m : models) {
            RunRecord r;
            r.model = m;
            r.order = n;
            result.runs.push_back(std::move(r));
        }
    }

    // Each run is serial; the runs themselves are spread over threads.
    const auto n_runs = static_cast<long>(result.runs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n_runs; ++k) {
        RunRecord& r = result.runs[static_cast<std::size_t>(k)];
        try {
            RunResult out = run(dam_break_init(cfg, r.order), cfg.solver_config(r.model, r.order), false);
            r.steps = out.steps;
            r.hyperbolicity_warnings = out.hyperbolicity_warnings;
            r.max_imag = out.max_imag;
            r.field = std::move(out.field);
        } catch (const std::exception& e) {
            r.status = RunStatus::Failed;
            r.message = e.what();
        }
    }

    for (ModelKind m : cfg.models) {
        if (m == ModelKind::SWME) continue;
        for (int n : cfg.orders) {
            const RunRecord* ref = result.find(ModelKind::SWME, n);
            const RunRecord* run_rec = result.find(m, n);
            for (const auto& var : cfg.variables) {
                const int idx = variable_index(var);
                if (idx >= n + 2) continue;
                ComparisonRow row;
                row.model = m;
                row.order = n;
                row.variable = var;
                if (ref->status != RunStatus::Ok) {
                    row.status = RunStatus::SkippedUnstable;
                    row.error = std::nan("");
                } else if (run_rec->status != RunStatus::Ok) {
                    row.status = RunStatus::Failed;
                    row.error = std::nan("");
                } else {
                    const RelativeError e = relative_error(*run_rec->field, *ref->field, idx);
                    row.error = e.value;
                    row.absolute = e.absolute;
                }
                result.rows.push_back(row);
            }
        }
    }
    return result;
}

void write_comparison_csv(std::ostream& os, const ComparisonResult& result) {
    CsvWriter csv(os);
    csv.header({"model", "N", "variable", "rel_error", "absolute", "status"});
    for (const auto& r : result.rows) {
        csv.row_begin();
        csv.field(model_name(r.model));
        csv.field(r.order);
        csv.field(r.variable);
        csv.field(r.error);
        csv.field(r.absolute ? 1 : 0);
        csv.field(status_name(r.status));
        csv.row_end();
    }
}

void write_runs_csv(std::ostream& os, const ComparisonResult& result) {
    CsvWriter csv(os);
    csv.header({"model", "N", "status", "steps", "hyperbolicity_warnings", "max_imag", "message"});
    for (const auto& r : result.runs) {
        std::string msg = r.message;
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        csv.row_begin();
        csv.field(model_name(r.model));
        csv.field(r.order);
        csv.field(status_name(r.status));
        csv.field(r.steps);
        csv.field(r.hyperbolicity_warnings);
        csv.field(r.max_imag);
        csv.field(msg);
        csv.row_end();
    }
}

}  // namespace swm
