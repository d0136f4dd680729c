#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pk {

// Scalar report entry with a byte-stable textual form: doubles are printed in
// full-precision scientific notation so identical inputs produce identical
// reports.
struct ReportValue {
    enum class Kind { text, integer, real, boolean } kind = Kind::text;
    std::string text;
    std::int64_t integer = 0;
    double real = 0.0;
    bool boolean = false;

    static ReportValue of(const std::string& s);
    static ReportValue of(const char* s);
    static ReportValue of(std::int64_t v);
    static ReportValue of(int v);
    static ReportValue of(double v);
    static ReportValue of(bool v);

    // JSON token (quoted/escaped for text, %.17e for reals).
    std::string json() const;
    // Raw CSV field.
    std::string csv() const;
};

struct Check {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

enum class ReportFormat { json, csv };

// Outcome of one CLI subcommand: echoed inputs, computed outputs, and the
// pass/fail checks that drive the exit code.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, ReportValue>> inputs;
    std::vector<std::pair<std::string, ReportValue>> outputs;
    std::vector<Check> checks;
    std::vector<std::string> table_header;
    std::vector<std::vector<ReportValue>> table_rows;
    // Reported as 0 unless timing was explicitly requested, to keep repeated
    // invocations byte-identical.
    double wall_time = 0.0;

    void add_input(const std::string& key, ReportValue v) { inputs.emplace_back(key, v); }
    void add_output(const std::string& key, ReportValue v) { outputs.emplace_back(key, v); }
    void add_check(const std::string& name, bool pass, double measured, double tolerance) {
        checks.push_back(Check{name, pass, measured, tolerance});
    }

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }
};

void emit_report(const RunReport& report, ReportFormat format, std::ostream& out);

std::string format_double(double v);

}  // namespace pk
