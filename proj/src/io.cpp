#include "swm/io.hpp"

#include "swm/solver.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>

#ifndef SWM_VERSION
#define SWM_VERSION "0.0.0"
#endif

namespace swm {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // also folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void CsvWriter::put(std::string_view v) {
    if (!first_) os_ << ',';
    os_ << v;
    first_ = false;
}

void CsvWriter::header(const std::vector<std::string>& names) {
    row_begin();
    for (const auto& n : names) put(n);
    row_end();
}

void CsvWriter::row(const std::vector<double>& values) {
    row_begin();
    for (double v : values) field(v);
    row_end();
}

std::vector<std::string> snapshot_columns(int order) {
    std::vector<std::string> cols{"x", "h", "u_m"};
    for (int i = 1; i <= order; ++i) cols.push_back("a" + std::to_string(i));
    return cols;
}

void write_snapshot_csv(std::ostream& os, const Field1D& field) {
    CsvWriter csv(os);
    csv.header(snapshot_columns(field.order()));
    for (int i = 0; i < field.n_cells(); ++i) {
        const PrimitiveState up = field.primitive(i, 0.0);
        csv.row_begin();
        csv.field(field.x(i));
        for (int k = 0; k < field.n_vars(); ++k) csv.field(up.vector()[k]);
        csv.row_end();
    }
}

void write_diagnostics_csv(std::ostream& os, const std::vector<StepDiagnostics>& diagnostics) {
    CsvWriter csv(os);
    csv.header({"step", "time", "dt", "mass", "momentum", "max_imag"});
    long step = 0;
    for (const auto& d : diagnostics) {
        csv.row_begin();
        csv.field(++step);
        csv.field(d.time);
        csv.field(d.dt);
        csv.field(d.mass);
        csv.field(d.momentum);
        csv.field(d.max_imag);
        csv.row_end();
    }
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string iso_timestamp(std::chrono::system_clock::time_point t) {
    const std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm utc{};
    gmtime_r(&tt, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["config_hash"] = config_hash;
    j["version"] = version;
    j["started"] = started;
    j["finished"] = finished;
    j["wall_seconds"] = wall_seconds;
    j["files"] = files;
    j["runs"] = nlohmann::json::array();
    for (const auto& r : runs) {
        j["runs"].push_back({{"name", r.name}, {"status", r.status}, {"message", r.message}});
    }
    return j.dump(2);
}

void RunManifest::write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_json() << '\n';
}

std::filesystem::path resolve_output_dir(const std::string& explicit_dir, const std::filesystem::path& fallback) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("SWM_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
    return fallback;
}

std::string_view version() { return SWM_VERSION; }

}  // namespace swm
