#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace lqvac::cli {

using Json = nlohmann::ordered_json;

// Numeric result of one subcommand, one record per row.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
};

struct Report {
    Json inputs = Json::object();
    Table table;
    Json diagnostics = Json::object();
    // One-row tables are written as a JSON object of scalars rather than arrays.
    bool scalar_result = false;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_number(double v);

std::string to_json(const Report& report);
std::string to_csv(const Report& report);

}  // namespace lqvac::cli
