#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "legspec/problems.hpp"

namespace legspec::cli
{

/// Bad flags, bad JSON, unknown builtin: exit code 2.
struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

enum class TableFormat
{
    Csv,
    Json
};

struct ProblemConfig
{
    std::optional<std::string> builtin;
    std::optional<std::string> expression;
    std::optional<Real> omega, beta, nu, alpha, gamma, t_end;
    std::optional<Real> a, b;
    std::optional<Index> split, piece;
};

struct RunConfig
{
    ProblemConfig problem;
    std::optional<Index> M;
    bool auto_size = false;
    std::optional<Real> tol;
    bool no_underline = false;
    bool skip_nu = false;
    std::optional<std::string> out;
    TableFormat format = TableFormat::Csv;
    Index grid_points = 0; // 0: 10 M
};

/// Fill every field still unset from a JSON object with the long flag names
/// as keys ("omega", "M", "no-underline", ...). Unknown keys are an error.
void merge_json(RunConfig& config, const nlohmann::json& source);

/// Build the problem; throws ConfigError for inconsistent settings.
[[nodiscard]] OdeProblem make_problem(const ProblemConfig& config);

[[nodiscard]] SolveOptions make_options(const RunConfig& config);

} // namespace legspec::cli
