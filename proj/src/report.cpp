#include "pk/report.hpp"

#include <cstdio>

namespace pk {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17e", v);
    return buf;
}

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string escape_csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void emit_kv_block(std::ostream& out,
                   const std::vector<std::pair<std::string, ReportValue>>& kv) {
    out << "{";
    bool first = true;
    for (const auto& [key, val] : kv) {
        if (!first) out << ", ";
        first = false;
        out << "\"" << escape_json(key) << "\": " << val.json();
    }
    out << "}";
}

}  // namespace

ReportValue ReportValue::of(const std::string& s) {
    ReportValue v;
    v.kind = Kind::text;
    v.text = s;
    return v;
}
ReportValue ReportValue::of(const char* s) { return of(std::string(s)); }
ReportValue ReportValue::of(std::int64_t i) {
    ReportValue v;
    v.kind = Kind::integer;
    v.integer = i;
    return v;
}
ReportValue ReportValue::of(int i) { return of(static_cast<std::int64_t>(i)); }
ReportValue ReportValue::of(double d) {
    ReportValue v;
    v.kind = Kind::real;
    v.real = d;
    return v;
}
ReportValue ReportValue::of(bool b) {
    ReportValue v;
    v.kind = Kind::boolean;
    v.boolean = b;
    return v;
}

std::string ReportValue::json() const {
    switch (kind) {
        case Kind::text: return "\"" + escape_json(text) + "\"";
        case Kind::integer: return std::to_string(integer);
        case Kind::real: return format_double(real);
        case Kind::boolean: return boolean ? "true" : "false";
    }
    return "null";
}

std::string ReportValue::csv() const {
    switch (kind) {
        case Kind::text: return escape_csv(text);
        case Kind::integer: return std::to_string(integer);
        case Kind::real: return format_double(real);
        case Kind::boolean: return boolean ? "true" : "false";
    }
    return "";
}

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void emit_report(const RunReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::json) {
        out << "{\n";
        out << "  \"command\": \"" << escape_json(report.command) << "\",\n";
        out << "  \"inputs\": ";
        emit_kv_block(out, report.inputs);
        out << ",\n  \"outputs\": ";
        emit_kv_block(out, report.outputs);
        out << ",\n  \"checks\": [";
        for (std::size_t i = 0; i < report.checks.size(); ++i) {
            const Check& c = report.checks[i];
            if (i) out << ",";
            out << "\n    {\"name\": \"" << escape_json(c.name) << "\", \"pass\": "
                << (c.pass ? "true" : "false") << ", \"measured\": " << format_double(c.measured)
                << ", \"tolerance\": " << format_double(c.tolerance) << "}";
        }
        if (!report.checks.empty()) out << "\n  ";
        out << "]";
        if (!report.table_header.empty()) {
            out << ",\n  \"rows\": [";
            for (std::size_t i = 0; i < report.table_rows.size(); ++i) {
                if (i) out << ",";
                out << "\n    {";
                for (std::size_t j = 0; j < report.table_header.size(); ++j) {
                    if (j) out << ", ";
                    out << "\"" << escape_json(report.table_header[j])
                        << "\": " << report.table_rows[i][j].json();
                }
                out << "}";
            }
            if (!report.table_rows.empty()) out << "\n  ";
            out << "]";
        }
        out << ",\n  \"wall_time\": " << format_double(report.wall_time) << "\n}\n";
        return;
    }

    // CSV: the row table when present, otherwise the checks table.
    if (!report.table_header.empty()) {
        for (std::size_t j = 0; j < report.table_header.size(); ++j) {
            if (j) out << ",";
            out << escape_csv(report.table_header[j]);
        }
        out << "\n";
        for (const auto& row : report.table_rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out << ",";
                out << row[j].csv();
            }
            out << "\n";
        }
        return;
    }
    out << "name,pass,measured,tolerance\n";
    for (const auto& c : report.checks) {
        out << escape_csv(c.name) << "," << (c.pass ? "true" : "false") << ","
            << format_double(c.measured) << "," << format_double(c.tolerance) << "\n";
    }
}

}  // namespace pk
