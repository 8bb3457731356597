#include "qpom/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qpom {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void escape_string(const std::string& s, std::ostream& out) {
    out << '"';
    for (char c : s) {
        switch (c) {
        case '"': out << "\\\""; break;
        case '\\': out << "\\\\"; break;
        case '\n': out << "\\n"; break;
        case '\t': out << "\\t"; break;
        default: out << c;
        }
    }
    out << '"';
}

void dump(const json& j, std::ostream& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out << ",\n";
            first = false;
            out << pad_in;
            escape_string(it.key(), out);
            out << ": ";
            dump(it.value(), out, indent, depth + 1);
        }
        out << '\n' << pad << '}';
        break;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out << "[]";
            return;
        }
        out << "[\n";
        bool first = true;
        for (const auto& v : j) {
            if (!first) out << ",\n";
            first = false;
            out << pad_in;
            dump(v, out, indent, depth + 1);
        }
        out << '\n' << pad << ']';
        break;
    }
    case json::value_t::number_float:
        // NaN/Infinity are emitted as strings to keep reports parseable.
        if (!std::isfinite(j.get<double>()))
            escape_string(format_double(j.get<double>()), out);
        else
            out << format_double(j.get<double>());
        break;
    case json::value_t::string:
        escape_string(j.get<std::string>(), out);
        break;
    default:
        out << j.dump();
    }
}

} // namespace

void write_report(const json& j, std::ostream& out, int indent) {
    dump(j, out, indent, 0);
    out << '\n';
}

std::string report_string(const json& j, int indent) {
    std::ostringstream out;
    write_report(j, out, indent);
    return out.str();
}

std::string CsvTable::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "");
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        out << '\n';
    }
    return out.str();
}

} // namespace qpom
