#include "legspec/solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "legspec/analysis.hpp"
#include "legspec/basis_matrix.hpp"

namespace legspec
{

OdeProblem rescale_to_reference(const OdeProblem& problem)
{
    const Interval iv = problem.interval;
    if (!(iv.length() > 0.0))
        throw DomainError("rescale_to_reference: interval must have positive length");
    if (iv.is_reference())
        return problem;
    OdeProblem out = problem;
    out.interval = Interval{};
    const Real half = iv.length() / 2.0;
    const Real a = iv.a;
    auto f = problem.f;
    out.f = [f, half, a](Real t) { return half * f(a + (t + 1.0) * half); };
    if (problem.exact)
    {
        auto u = *problem.exact;
        out.exact = [u, half, a](Real t) { return u(a + (t + 1.0) * half); };
    }
    return out;
}

SystemSolution solve_system(const ComplexBandedMatrix& f, const ComplexVector& rhs, Real pivot_tol)
{
    const Index n = f.size();
    if (rhs.size() != n)
        throw SizeError("solve_system: right-hand side has the wrong length");
    ComplexBandedMatrix a(n, f.lower(), f.upper());
    a.add_scaled(Complex(-1.0), f);
    for (Index i = 0; i < n; ++i)
        a.coeffRef(i, i) += 1.0;
    const BandedLU<Complex> lu(a, pivot_tol);
    SystemSolution out;
    out.x = lu.solve(rhs);
    const Real denom = (1.0 + f.inf_norm()) * out.x.cwiseAbs().maxCoeff() + rhs.cwiseAbs().maxCoeff();
    const ComplexVector r = a * out.x - rhs;
    out.backward_error = denom > 0.0 ? r.cwiseAbs().maxCoeff() / denom : 0.0;
    return out;
}

SystemSolution solve_system(const CoeffMatrix& f, const ComplexVector& rhs, Real pivot_tol)
{
    return solve_system(f.matrix, rhs, pivot_tol);
}

LegendreSeries prepare_series(const ScalarFunction& f_reference, const SolveOptions& options)
{
    const LegendreSeries full = expand_function(f_reference, options.expansion_tol);
    const Real delta = options.bandwidth_tol.value_or(default_bandwidth_tolerance(full));
    if (delta == 0.0)
        return full.truncated(0);
    return full.truncated(bandwidth_for_tolerance(full, delta, options.bandwidth_weight));
}

SolveReport solve_with_series(const OdeProblem& reference_problem, const LegendreSeries& series, Index size,
                              const SolveOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const Index n = series.degree();
    if (size < n + 2)
        throw SizeError("solve: M = " + std::to_string(size) + " is below N + 2 = " + std::to_string(n + 2));

    SolveReport report;
    report.M = size;
    report.N = n;
    const CoeffMatrix full = assemble(series, size);
    const CoeffMatrix system = options.underline ? underline_truncate(full) : full;

    const ComplexVector rhs = phi_vector(size, -1.0).cast<Complex>();
    SystemSolution sol = solve_system(system, rhs, options.pivot_tol);
    report.backward_error = sol.backward_error;
    report.x_hat = std::move(sol.x);

    RealBandedMatrix theta = theta_matrix(size);
    if (options.underline)
        theta = underline_theta(theta);
    report.coeffs.coeffs = theta.cast<Complex>() * report.x_hat;

    report.nu_bound = numerical_radius_bound(full);
    if (options.estimate_nu)
    {
        report.nu_estimate = numerical_radius_estimate(full, options.theta_count);
        report.nu_abscissa = numerical_abscissa(full);
    }
    const ConjectureCheck conj = conjecture_check(series);
    report.coefficient_sum = conj.coefficient_sum;
    report.conjecture_satisfied = conj.satisfied;
    if (options.estimate_k)
        report.K_est = trailing_column_reach(system.matrix, n + 2);

    report.chopped_len = chop_series(report.coeffs.coeffs, reference_problem.tol);
    // With the underline, the last N+1 coefficients are forced towards zero;
    // only a plateau reaching below them means the expansion resolved.
    const Index forced = options.underline ? n + 1 : 0;
    report.plateau_found = report.chopped_len + forced < size;
    if (!report.plateau_found)
        report.warnings.push_back("no coefficient plateau below tol: M is probably too small");

    report.initial_value = eval_series(report.coeffs.coeffs, -1.0);
    report.initial_condition_ok = std::abs(report.initial_value - 1.0) <= 1e3 * reference_problem.tol;
    if (!report.initial_condition_ok)
    {
        std::ostringstream msg;
        msg << "u_hat(-1) = " << report.initial_value << " differs from 1 by more than 1e3 * tol";
        report.warnings.push_back(msg.str());
    }

    if (options.compute_errors && reference_problem.exact)
    {
        const ScalarFunction& u = *reference_problem.exact;
        report.err_f = err_f(report.coeffs.coeffs, u, size);
        const LegendreSeries exact_coeffs = expand_function(u, kMachineEps);
        report.err_c = err_c(report.coeffs.coeffs, exact_coeffs.coeffs);
        report.max_err_c = report.err_c->maxCoeff();
    }
    report.seconds = std::chrono::duration<Real>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SolveReport solve_ode(const OdeProblem& problem, Index size, const SolveOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const OdeProblem ref = rescale_to_reference(problem);
    const LegendreSeries series = prepare_series(ref.f, options);
    SolveReport report = solve_with_series(ref, series, size, options);
    report.seconds = std::chrono::duration<Real>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Index auto_size(const OdeProblem& problem, const SolveOptions& options)
{
    if (!(problem.tol > 0.0))
        throw DomainError("auto_size: tolerance must be positive");
    const OdeProblem ref = rescale_to_reference(problem);
    const LegendreSeries series = prepare_series(ref.f, options);
    const Index n = series.degree();
    SolveOptions opts = options;
    opts.estimate_k = true;
    opts.estimate_nu = false;
    opts.compute_errors = false;
    for (Index m = std::max<Index>(4 * (n + 2), 64); m <= kMaxAutoSize; m *= 2)
    {
        const SolveReport report = solve_with_series(ref, series, m, opts);
        const Index k = report.K_est.value_or(0);
        if (report.chopped_len + n + k + 3 <= m)
            return m;
    }
    throw ConvergenceError("auto_size: no plateau up to M = " + std::to_string(kMaxAutoSize));
}

} // namespace legspec
