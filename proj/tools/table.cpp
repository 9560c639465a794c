#include "table.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace legspec::cli
{

std::string format_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != m_columns.size())
        throw std::logic_error("Table::add_row: column count mismatch");
    m_rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& out) const
{
    auto cell_text = [](const Cell& c) -> std::string {
        if (std::holds_alternative<long long>(c))
            return std::to_string(std::get<long long>(c));
        if (std::holds_alternative<double>(c))
            return format_number(std::get<double>(c));
        if (std::holds_alternative<std::string>(c))
            return std::get<std::string>(c);
        return "";
    };
    for (std::size_t i = 0; i < m_columns.size(); ++i)
        out << (i ? "," : "") << m_columns[i];
    out << '\n';
    for (const auto& row : m_rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
}

nlohmann::json Table::to_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m_rows)
    {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::monostate>)
                        obj[m_columns[i]] = nullptr;
                    else
                        obj[m_columns[i]] = v;
                },
                row[i]);
        rows.push_back(std::move(obj));
    }
    return rows;
}

void Table::write(std::ostream& out, TableFormat format) const
{
    if (format == TableFormat::Csv)
        write_csv(out);
    else
        out << to_json().dump(2) << '\n';
}

void write_file(const std::string& dir, const std::string& name, const std::string& text)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw ConfigError("cannot write '" + path.string() + "'");
}

} // namespace legspec::cli
