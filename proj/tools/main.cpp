#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "legspec/expression.hpp"

using namespace legspec;
using namespace legspec::cli;

namespace
{

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void add_run_flags(CLI::App& cmd, RunConfig& c, std::string& config_file, std::string& format)
{
    ProblemConfig& p = c.problem;
    cmd.add_option("--builtin", p.builtin, "Built-in problem: toy, poly, nmr");
    cmd.add_option("--f", p.expression, "Coefficient f(t) as an expression in t");
    cmd.add_option("--omega", p.omega, "toy: frequency (default 5)");
    cmd.add_option("--beta", p.beta, "toy: amplitude divisor (10); nmr: first harmonic (3450)");
    cmd.add_option("--nu", p.nu, "nmr: spinning frequency (5000)");
    cmd.add_option("--alpha", p.alpha, "nmr: constant term (0.05)");
    cmd.add_option("--gamma", p.gamma, "nmr: second harmonic (3450)");
    cmd.add_option("--tend", p.t_end, "poly/nmr: interval end; with --f the interval is [a, tend]");
    cmd.add_option("--a", p.a, "--f: left end (default -1, or 0 with --tend)");
    cmd.add_option("--b", p.b, "--f: right end (default 1)");
    cmd.add_option("--split", p.split, "Cut the interval into K equal pieces");
    cmd.add_option("--piece", p.piece, "Which piece to solve on (default 0)");
    cmd.add_option("--M", c.M, "System size");
    cmd.add_flag("--auto-size", c.auto_size, "Choose M by doubling");
    cmd.add_option("--tol", c.tol, "Target accuracy of the coefficients (default 1e-14)");
    cmd.add_flag("--no-underline", c.no_underline, "Keep the last N+1 rows of F and the last row of T");
    cmd.add_flag("--no-nu", c.skip_nu, "solve: skip the numerical radius and abscissa estimates");
    cmd.add_option("--out", c.out, "Write files into this directory instead of stdout");
    cmd.add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--grid-points", c.grid_points, "solve: sample count of the solution grid (default 10 M)");
    cmd.add_option("--config", config_file, "JSON file with the same keys as the long flags; flags win");
}

void finish_config(RunConfig& c, const std::string& config_file, const std::string& format)
{
    if (!format.empty())
        c.format = format == "json" ? TableFormat::Json : TableFormat::Csv;
    if (config_file.empty())
        return;
    std::ifstream in(config_file);
    if (!in)
        throw ConfigError("cannot open config file '" + config_file + "'");
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ConfigError(std::string("config file: ") + e.what());
    }
    const bool format_given = !format.empty();
    const TableFormat chosen = c.format;
    merge_json(c, j);
    if (format_given)
        c.format = chosen;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral Legendre solver for u' = f(t) u"};
    app.require_subcommand(1);

    RunConfig config;
    std::string config_file, format, table;

    CLI::App* solve = app.add_subcommand("solve", "Solve one problem; writes coefficients, a solution grid and a report");
    add_run_flags(*solve, config, config_file, format);

    CLI::App* diagnose = app.add_subcommand("diagnose", "Bandwidths, numerical radius and decay estimates, no solve");
    add_run_flags(*diagnose, config, config_file, format);

    CLI::App* reproduce = app.add_subcommand("reproduce", "Recompute a reference table next to its stored values");
    reproduce->add_option("table", table, "2, 4, 5, toy or nmr")->required();
    reproduce->add_option("--out", config.out, "Write table_<id>.<ext> into this directory");
    reproduce->add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try
    {
        finish_config(config, config_file, format);
        if (*solve)
            return run_solve(config, std::cout);
        if (*diagnose)
            return run_diagnose(config, std::cout);
        return run_reproduce(table, config, std::cout);
    }
    catch (const ConfigError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const ParseError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const DomainError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const SizeError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const SingularSystemError& e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    catch (const ConvergenceError& e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}
