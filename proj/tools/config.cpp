#include "config.hpp"

#include <set>

namespace legspec::cli
{

namespace
{

template <typename T>
void take(std::optional<T>& field, const nlohmann::json& source, const char* key)
{
    if (!field && source.contains(key))
        field = source.at(key).get<T>();
}

} // namespace

void merge_json(RunConfig& config, const nlohmann::json& source)
{
    static const std::set<std::string> known = {"builtin", "f",   "omega", "beta", "nu",    "alpha",        "gamma",
                                                "tend",    "a",   "b",     "split", "piece", "M",           "auto-size",
                                                "tol",     "no-underline", "no-nu", "out", "format", "grid-points"};
    if (!source.is_object())
        throw ConfigError("config file: top level must be an object");
    for (const auto& item : source.items())
        if (!known.contains(item.key()))
            throw ConfigError("config file: unknown key '" + item.key() + "'");
    try
    {
        ProblemConfig& p = config.problem;
        take(p.builtin, source, "builtin");
        take(p.expression, source, "f");
        take(p.omega, source, "omega");
        take(p.beta, source, "beta");
        take(p.nu, source, "nu");
        take(p.alpha, source, "alpha");
        take(p.gamma, source, "gamma");
        take(p.t_end, source, "tend");
        take(p.a, source, "a");
        take(p.b, source, "b");
        take(p.split, source, "split");
        take(p.piece, source, "piece");
        take(config.M, source, "M");
        take(config.tol, source, "tol");
        take(config.out, source, "out");
        if (source.contains("auto-size"))
            config.auto_size = config.auto_size || source.at("auto-size").get<bool>();
        if (source.contains("no-underline"))
            config.no_underline = config.no_underline || source.at("no-underline").get<bool>();
        if (source.contains("no-nu"))
            config.skip_nu = config.skip_nu || source.at("no-nu").get<bool>();
        if (source.contains("format"))
        {
            const std::string f = source.at("format").get<std::string>();
            if (f != "csv" && f != "json")
                throw ConfigError("config file: format must be csv or json");
            config.format = f == "json" ? TableFormat::Json : TableFormat::Csv;
        }
        if (source.contains("grid-points") && config.grid_points == 0)
            config.grid_points = source.at("grid-points").get<Index>();
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ConfigError(std::string("config file: ") + e.what());
    }
}

OdeProblem make_problem(const ProblemConfig& c)
{
    if (c.builtin && c.expression)
        throw ConfigError("give either --builtin or --f, not both");
    if (!c.builtin && !c.expression)
        throw ConfigError("no problem: pass --builtin NAME or --f EXPR");

    OdeProblem problem;
    if (c.expression)
    {
        Interval interval{c.a.value_or(-1.0), c.b.value_or(1.0)};
        if (c.t_end)
        {
            if (c.b)
                throw ConfigError("--tend and --b both set the right end");
            interval = Interval{c.a.value_or(0.0), *c.t_end};
        }
        if (!(interval.b > interval.a))
            throw ConfigError("interval must have a < b");
        problem = expression_problem(*c.expression, interval);
        problem.name = "expression";
    }
    else if (*c.builtin == "toy")
        problem = toy_problem(c.omega.value_or(5.0), c.beta.value_or(10.0));
    else if (*c.builtin == "poly")
        problem = polynomial_problem(c.t_end.value_or(25.0));
    else if (*c.builtin == "nmr")
    {
        NmrParams q;
        q.nu = c.nu.value_or(q.nu);
        q.alpha = c.alpha.value_or(q.alpha);
        q.beta = c.beta.value_or(q.beta);
        q.gamma = c.gamma.value_or(q.gamma);
        q.t_end = c.t_end.value_or(q.t_end);
        q.split = c.split.value_or(q.split);
        q.piece = c.piece.value_or(q.piece);
        problem = nmr_problem(q);
    }
    else
        throw ConfigError("unknown builtin '" + *c.builtin + "' (toy, poly, nmr)");

    if (c.split && *c.builtin != "nmr")
    {
        // Generic manual split: pose the problem on one piece. The exact
        // solution is no longer normalized at the piece's left end.
        const Index k = *c.split, i = c.piece.value_or(0);
        if (k < 1 || i < 0 || i >= k)
            throw ConfigError("--split K needs K >= 1 and 0 <= --piece < K");
        const Real h = problem.interval.length() / Real(k);
        const Interval whole = problem.interval;
        problem.interval = Interval{whole.a + h * Real(i), whole.a + h * Real(i + 1)};
        if (problem.exact)
        {
            const ScalarFunction u = *problem.exact;
            const Complex start = u(problem.interval.a);
            problem.exact = [u, start](Real t) { return u(t) / start; };
        }
    }
    return problem;
}

SolveOptions make_options(const RunConfig& config)
{
    SolveOptions o;
    o.underline = !config.no_underline;
    o.estimate_nu = !config.skip_nu;
    return o;
}

} // namespace legspec::cli
