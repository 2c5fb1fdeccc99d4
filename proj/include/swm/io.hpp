#pragma once

#include "swm/field.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace swm {

struct StepDiagnostics;

/// Round-trip formatting: 17 significant digits, "nan"/"inf" spelled out.
std::string format_number(double v);

/// Minimal CSV writer: comma separated, no quoting (all fields are numeric or
/// fixed identifiers).
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}
    void header(const std::vector<std::string>& names);
    void row_begin() { first_ = true; }
    void field(double v) { put(format_number(v)); }
    void field(int v) { put(std::to_string(v)); }
    void field(long v) { put(std::to_string(v)); }
    void field(std::string_view v) { put(v); }
    void field(const char* v) { put(v); }
    void empty() { put(""); }
    void row_end() { os_ << '\n'; }
    void row(const std::vector<double>& values);

private:
    void put(std::string_view v);
    std::ostream& os_;
    bool first_ = true;
};

/// Header "x,h,u_m,a1,..,aN".
std::vector<std::string> snapshot_columns(int order);
/// One row per cell in primitive variables.
void write_snapshot_csv(std::ostream& os, const Field1D& field);

/// Header "step,time,dt,mass,momentum,max_imag".
void write_diagnostics_csv(std::ostream& os, const std::vector<StepDiagnostics>& diagnostics);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// UTC, "YYYY-MM-DDTHH:MM:SSZ".
std::string iso_timestamp(std::chrono::system_clock::time_point t);

/// Record of one CLI invocation that writes files.
struct RunManifest {
    struct Run {
        std::string name;
        std::string status;  // ok | failed | skipped-unstable
        std::string message;
    };
    std::string command;
    std::string config_hash;
    std::string version;
    std::string started;
    std::string finished;
    double wall_seconds = 0.0;
    std::vector<std::string> files;
    std::vector<Run> runs;

    std::string to_json() const;
    void write(const std::filesystem::path& path) const;
};

/// `explicit_dir` if non-empty, else $SWM_OUTPUT_DIR, else `fallback`.
std::filesystem::path resolve_output_dir(const std::string& explicit_dir,
                                         const std::filesystem::path& fallback = "swm_output");

/// Library version string.
std::string_view version();

}  // namespace swm
