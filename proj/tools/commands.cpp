#include "commands.hpp"

#include <sstream>

#include "legspec/analysis.hpp"
#include "legspec/reference_data.hpp"
#include "table.hpp"

namespace legspec::cli
{

namespace ref = legspec::reference;
using nlohmann::json;

namespace
{

json optional_json(const std::optional<Real>& v) { return v ? json(*v) : json(nullptr); }
json optional_json(const std::optional<Index>& v) { return v ? json(*v) : json(nullptr); }

OdeProblem configured_problem(const RunConfig& config)
{
    OdeProblem p = make_problem(config.problem);
    if (config.tol)
    {
        if (!(*config.tol > 0.0))
            throw ConfigError("--tol must be positive");
        p.tol = *config.tol;
    }
    return p;
}

json problem_json(const OdeProblem& p)
{
    return {{"name", p.name}, {"interval", {p.interval.a, p.interval.b}}, {"tol", p.tol},
            {"has_exact_solution", p.exact.has_value()}};
}

json report_json(const OdeProblem& p, const SolveReport& r)
{
    json j;
    j["problem"] = problem_json(p);
    j["M"] = r.M;
    j["N"] = r.N;
    j["K_est"] = optional_json(r.K_est);
    j["nu_bound"] = r.nu_bound;
    j["nu_estimate"] = optional_json(r.nu_estimate);
    j["nu_abscissa"] = optional_json(r.nu_abscissa);
    j["coefficient_sum"] = r.coefficient_sum;
    j["conjecture_satisfied"] = r.conjecture_satisfied;
    j["chopped_len"] = r.chopped_len;
    j["plateau_found"] = r.plateau_found;
    j["initial_value"] = {r.initial_value.real(), r.initial_value.imag()};
    j["initial_condition_ok"] = r.initial_condition_ok;
    j["backward_error"] = r.backward_error;
    j["err_f"] = optional_json(r.err_f);
    j["max_err_c"] = optional_json(r.max_err_c);
    j["seconds"] = r.seconds;
    j["warnings"] = r.warnings;
    return j;
}

Index choose_size(const RunConfig& config, const OdeProblem& problem, const SolveOptions& options)
{
    if (config.M && config.auto_size)
        throw ConfigError("give either --M or --auto-size, not both");
    if (config.M)
    {
        if (*config.M < 2)
            throw ConfigError("--M must be at least 2");
        return *config.M;
    }
    return auto_size(problem, options);
}

std::string extension(TableFormat f) { return f == TableFormat::Csv ? ".csv" : ".json"; }

void emit_table(const Table& table, const std::string& stem, const RunConfig& config, std::ostream& out)
{
    std::ostringstream text;
    table.write(text, config.format);
    if (config.out)
        write_file(*config.out, stem + extension(config.format), text.str());
    else
        out << text.str();
}

Real abscissa_for(const OdeProblem& problem, Index M)
{
    return numerical_abscissa(assemble(prepare_series(rescale_to_reference(problem).f, {}), M));
}

SolveOptions table_options()
{
    SolveOptions o;
    o.estimate_k = false;
    return o;
}

Table toy_table()
{
    Table t({"omega", "beta", "M", "N", "coefficient_sum", "coefficient_sum_ref", "nu", "nu_ref", "err_f", "err_f_ref",
             "max_err_c", "max_err_c_ref"});
    for (const auto& row : ref::kToy)
    {
        const OdeProblem p = toy_problem(row.omega, row.beta);
        const SolveReport r = solve_ode(p, row.M, table_options());
        t.add_row({row.omega, row.beta, (long long)row.M, (long long)r.N, r.coefficient_sum, row.coefficient_sum,
                   abscissa_for(p, row.M), row.nu, *r.err_f, row.err_f, *r.max_err_c, row.max_err_c});
    }
    return t;
}

Table polynomial_table()
{
    Table t({"t_end", "M", "coefficient_sum", "coefficient_sum_ref", "nu", "nu_ref", "err_c", "err_c_ref", "err_f",
             "err_f_ref"});
    for (const auto& row : ref::kPolynomial)
    {
        const OdeProblem p = polynomial_problem(row.t_end);
        const SolveReport r = solve_ode(p, row.M, table_options());
        t.add_row({row.t_end, (long long)row.M, r.coefficient_sum, row.coefficient_sum, abscissa_for(p, row.M), row.nu,
                   *r.max_err_c, row.err_c, *r.err_f, row.err_f});
    }
    return t;
}

template <std::size_t n>
Table convergence_table(Real t_end, const std::array<ref::ConvergenceRow, n>& rows)
{
    // last_coeff is |c_hat| at 0-based index M - 2 (the last entry is zero after underlining).
    Table t({"M", "err_f", "err_f_ref", "last_coeff", "last_coeff_ref"});
    const OdeProblem reference_problem = rescale_to_reference(polynomial_problem(t_end));
    const LegendreSeries series = prepare_series(reference_problem.f, {});
    for (const auto& row : rows)
    {
        const SolveReport r = solve_with_series(reference_problem, series, row.M, table_options());
        t.add_row({(long long)row.M, *r.err_f, row.err_f, std::abs(r.coeffs.coeffs(row.M - 2)), row.last_coeff});
    }
    return t;
}

Table nmr_table()
{
    Table t({"nu", "split", "piece", "M", "N", "nu_abscissa", "err_f", "err_f_ref", "max_err_c"});
    for (const auto& row : ref::kNmr)
    {
        NmrParams q;
        q.nu = row.nu;
        q.split = row.split;
        const OdeProblem p = nmr_problem(q);
        const SolveReport r = solve_ode(p, row.M, table_options());
        t.add_row({row.nu, (long long)row.split, 0LL, (long long)row.M, (long long)r.N, abscissa_for(p, row.M),
                   *r.err_f, row.err_f, *r.max_err_c});
    }
    return t;
}

} // namespace

int run_solve(const RunConfig& config, std::ostream& out)
{
    const OdeProblem problem = configured_problem(config);
    const SolveOptions options = make_options(config);
    const Index M = choose_size(config, problem, options);
    const SolveReport r = solve_ode(problem, M, options);

    const json report = report_json(problem, r);
    if (!config.out)
    {
        out << report.dump(2) << '\n';
        return 0;
    }

    Table coeffs({"index", "re", "im"});
    for (Index k = 0; k < r.coeffs.size(); ++k)
        coeffs.add_row({(long long)k, r.coeffs.coeffs(k).real(), r.coeffs.coeffs(k).imag()});
    emit_table(coeffs, "coefficients", config, out);

    const Index points = config.grid_points > 0 ? config.grid_points : 10 * M;
    const EvalGrid grid = sample_series(r.coeffs.coeffs, points);
    const Real half = problem.interval.length() / 2;
    Table solution({"t", "re", "im"});
    for (Index i = 0; i < grid.nodes.size(); ++i)
        solution.add_row({problem.interval.a + (grid.nodes(i) + 1) * half, grid.values(i).real(), grid.values(i).imag()});
    emit_table(solution, "solution", config, out);

    write_file(*config.out, "report.json", report.dump(2) + "\n");
    return 0;
}

int run_diagnose(const RunConfig& config, std::ostream& out)
{
    const OdeProblem problem = configured_problem(config);
    const SolveOptions options = make_options(config);
    const OdeProblem reference_problem = rescale_to_reference(problem);
    const LegendreSeries series = prepare_series(reference_problem.f, options);
    const Index N = series.degree();
    if (config.auto_size)
        throw ConfigError("diagnose takes --M (default max(4(N+2), 64)), not --auto-size");
    const Index M = config.M.value_or(std::max<Index>(4 * (N + 2), 64));
    if (M <= N + 1)
        throw ConfigError("--M must exceed N + 1 = " + std::to_string(N + 1));

    CoeffMatrix f = assemble(series, M);
    const ConjectureCheck conjecture = conjecture_check(series);

    json j;
    j["problem"] = problem_json(problem);
    j["M"] = M;
    j["N"] = N;
    j["coefficient_sum"] = conjecture.coefficient_sum;
    j["conjecture"] = {
        {"threshold", kConjectureThreshold},
        {"satisfied", conjecture.satisfied},
        {"note", conjecture.satisfied
                     ? "sum |alpha_d| below threshold: off-band decay of (I - F)^{-1} is guaranteed"
                     : "advisory only: sum |alpha_d| above threshold, so decay is not guaranteed; the solve may still succeed"}};
    j["nu_bound"] = numerical_radius_bound(f);
    j["nu_estimate"] = numerical_radius_estimate(f);
    j["nu_abscissa"] = numerical_abscissa(f);

    std::vector<std::string> warnings;
    const CoeffMatrix system = options.underline ? underline_truncate(f) : f;
    try
    {
        const Index k_est = trailing_column_reach(system.matrix, N + 2);
        j["K_est"] = k_est;
        j["predicted_accurate_entries"] = predicted_accurate_entries(M, N, k_est);
        j["K_profile"] = M <= 2000 ? json(resolvent_decay_profile(f).K) : json(nullptr);
    }
    catch (const SingularSystemError& e)
    {
        j["K_est"] = nullptr;
        j["predicted_accurate_entries"] = nullptr;
        j["K_profile"] = nullptr;
        warnings.emplace_back(std::string("I - F did not factorize: ") + e.what());
    }
    j["warnings"] = warnings;

    const std::string text = j.dump(2) + "\n";
    if (config.out)
        write_file(*config.out, "diagnose.json", text);
    else
        out << text;
    return 0;
}

int run_reproduce(const std::string& table, const RunConfig& config, std::ostream& out)
{
    if (table == "toy")
        emit_table(toy_table(), "table_toy", config, out);
    else if (table == "2")
        emit_table(polynomial_table(), "table_2", config, out);
    else if (table == "4")
        emit_table(convergence_table(25, ref::kConvergence25), "table_4", config, out);
    else if (table == "5")
        emit_table(convergence_table(50, ref::kConvergence50), "table_5", config, out);
    else if (table == "nmr")
        emit_table(nmr_table(), "table_nmr", config, out);
    else
        throw ConfigError("unknown table '" + table + "' (2, 4, 5, toy, nmr)");
    return 0;
}

} // namespace legspec::cli
