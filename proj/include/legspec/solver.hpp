#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legspec/coeff_matrix.hpp"

namespace legspec
{

///
/// Scalar linear ODE u'(tau) = f(tau) u(tau), u(a) = 1 on [a, b].
///
struct OdeProblem
{
    ScalarFunction f;
    Interval interval;
    /// Solution on the same interval, if known in closed form.
    std::optional<ScalarFunction> exact;
    /// Target accuracy for the computed coefficients.
    Real tol = 1e-14;
    std::string name;
};

/// Map the problem onto [-1, 1]: f_new(t) = (L/2) f(a + (t+1) L/2), exact
/// solution composed with the same map. Identity when already on [-1, 1].
[[nodiscard]] OdeProblem rescale_to_reference(const OdeProblem& problem);

struct SolveOptions
{
    /// Relative tolerance for the expansion of f.
    Real expansion_tol = kMachineEps;
    /// Absolute truncation threshold for N; default eps * sum |alpha_d|.
    std::optional<Real> bandwidth_tol;
    TailWeight bandwidth_weight = TailWeight::Unit;
    bool underline = true;
    /// Relative pivot threshold in the banded LU.
    Real pivot_tol = kMachineEps * kMachineEps;
    /// Sample (I - F)^{-1} columns for a K estimate.
    bool estimate_k = true;
    /// Run the theta-grid numerical radius estimate (costly for large M).
    bool estimate_nu = false;
    Index theta_count = 64;
    /// Compute err_f / err_c when an exact solution is available.
    bool compute_errors = true;
};

struct SolveReport
{
    /// All M computed coefficients c_hat = T x_hat.
    LegendreSeries coeffs;
    ComplexVector x_hat;
    Index M = 0;
    Index N = 0;
    /// Reach of the trailing columns of (I - F)^{-1} above the diagonal.
    std::optional<Index> K_est;
    Real nu_bound = 0.0;
    std::optional<Real> nu_estimate;
    /// max Re W(F), computed alongside nu_estimate.
    std::optional<Real> nu_abscissa;
    Real coefficient_sum = 0.0;
    bool conjecture_satisfied = false;
    Index chopped_len = 0;
    bool plateau_found = false;
    Complex initial_value{1.0, 0.0};
    bool initial_condition_ok = true;
    Real backward_error = 0.0;
    std::optional<Real> err_f;
    std::optional<RealVector> err_c;
    std::optional<Real> max_err_c;
    Real seconds = 0.0;
    std::vector<std::string> warnings;
};

struct SystemSolution
{
    ComplexVector x;
    /// ||(I - F) x - b||_inf / ((1 + ||F||_inf) ||x||_inf + ||b||_inf)
    Real backward_error = 0.0;
};

/// Solve (I - F) x = rhs with a pivoted banded LU. Throws
/// SingularSystemError when a pivot drops below pivot_tol * max|a_ij|.
[[nodiscard]] SystemSolution solve_system(const ComplexBandedMatrix& f, const ComplexVector& rhs,
                                          Real pivot_tol = kMachineEps * kMachineEps);
[[nodiscard]] SystemSolution solve_system(const CoeffMatrix& f, const ComplexVector& rhs,
                                          Real pivot_tol = kMachineEps * kMachineEps);

/// Expansion of the (already rescaled) coefficient function truncated to the
/// bandwidth selected by `options`.
[[nodiscard]] LegendreSeries prepare_series(const ScalarFunction& f_reference, const SolveOptions& options);

/// Full procedure for a given size M.
[[nodiscard]] SolveReport solve_ode(const OdeProblem& problem, Index size, const SolveOptions& options = {});

/// Same, reusing an expansion computed by prepare_series on the rescaled problem.
[[nodiscard]] SolveReport solve_with_series(const OdeProblem& reference_problem, const LegendreSeries& series,
                                            Index size, const SolveOptions& options = {});

/// Doubling search from max(4(N+2), 64) until the computed coefficients show
/// a plateau at the problem's tolerance that leaves room for N + K + 3
/// unreliable trailing entries. Throws ConvergenceError past 2^20.
[[nodiscard]] Index auto_size(const OdeProblem& problem, const SolveOptions& options = {});

inline constexpr Index kMaxAutoSize = Index(1) << 20;

} // namespace legspec
