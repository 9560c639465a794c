#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace legspec::cli
{

using Cell = std::variant<std::monostate, long long, double, std::string>;

/// Column-named rows written as CSV (17 significant digits) or a JSON array.
class Table
{
public:
    explicit Table(std::vector<std::string> columns) : m_columns(std::move(columns)) {}

    void add_row(std::vector<Cell> row);

    void write_csv(std::ostream& out) const;
    [[nodiscard]] nlohmann::json to_json() const;
    void write(std::ostream& out, TableFormat format) const;

private:
    std::vector<std::string> m_columns;
    std::vector<std::vector<Cell>> m_rows;
};

[[nodiscard]] std::string format_number(double value);

/// Write `text` to dir/name, creating dir. Throws ConfigError on I/O failure.
void write_file(const std::string& dir, const std::string& name, const std::string& text);

} // namespace legspec::cli
