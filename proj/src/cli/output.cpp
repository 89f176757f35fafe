#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lqvac::cli {

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("Table::add_row: column count mismatch");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

bool is_leaf(const Json& j) { return !j.is_array() && !j.is_object(); }

void write_leaf(std::ostream& os, const Json& j) {
    if (j.is_number_float()) {
        const double v = j.get<double>();
        // JSON has no inf/nan literals.
        os << (std::isfinite(v) ? format_number(v) : std::string("null"));
    } else {
        os << j.dump();
    }
}

void write(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) os << ",\n";
            first = false;
            os << pad << Json(key).dump() << ": ";
            write(os, value, indent + 2);
        }
        os << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << "}";
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& e : j) flat = flat && is_leaf(e);
        if (flat) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ", ";
                write_leaf(os, j[i]);
            }
            os << "]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << pad;
            write(os, j[i], indent + 2);
        }
        os << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << "]";
    } else {
        write_leaf(os, j);
    }
}

Json result_json(const Report& r) {
    Json out = Json::object();
    const auto& t = r.table;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (r.scalar_result && t.rows.size() == 1) {
            out[t.columns[c]] = t.rows[0][c];
        } else {
            Json col = Json::array();
            for (const auto& row : t.rows) col.push_back(row[c]);
            out[t.columns[c]] = std::move(col);
        }
    }
    return out;
}

}  // namespace

std::string to_json(const Report& report) {
    Json doc = Json::object();
    doc["inputs"] = report.inputs;
    doc["result"] = result_json(report);
    doc["diagnostics"] = report.diagnostics;
    std::ostringstream os;
    write(os, doc, 0);
    os << "\n";
    return os.str();
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    const auto& t = report.table;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        os << (c ? "," : "") << t.columns[c];
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "") << format_number(row[c]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace lqvac::cli
