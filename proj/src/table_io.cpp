#include "pspchain/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pspchain {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::logic_error("table row width does not match the header");
    rows.push_back(std::move(row));
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::ostringstream os;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            std::visit(
                [&os](const auto& cell) {
                    using T = std::decay_t<decltype(cell)>;
                    if constexpr (std::is_same_v<T, double>)
                        os << format_double(cell);
                    else if constexpr (std::is_same_v<T, bool>)
                        os << (cell ? 1 : 0);
                    else
                        os << cell;
                },
                row[c]);
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json doc;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        nlohmann::ordered_json column = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            std::visit(
                [&column](const auto& cell) {
                    using T = std::decay_t<decltype(cell)>;
                    if constexpr (std::is_same_v<T, double>) {
                        // non-finite doubles have no JSON literal; emit null
                        if (std::isfinite(cell))
                            column.push_back(cell);
                        else
                            column.push_back(nullptr);
                    } else {
                        column.push_back(cell);
                    }
                },
                row[c]);
        }
        doc[table.columns[c]] = std::move(column);
    }
    return doc.dump(2) + "\n";
}

void write_table(const Table& table, const std::string& path, OutputFormat format) {
    const std::string payload = format == OutputFormat::Csv ? to_csv(table) : to_json(table);
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << payload;
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace pspchain
