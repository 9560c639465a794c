#pragma once

#include <string>

#include "legspec/solver.hpp"

namespace legspec
{

/// u' = -i (omega/beta) sin(omega (t+1)) u on [-1, 1];
/// u = exp(-(i/beta)(1 - cos(omega t + omega))).
[[nodiscard]] OdeProblem toy_problem(Real omega, Real beta);

/// u' = -i tau u on [0, t_end]; u = exp(-i tau^2 / 2).
[[nodiscard]] OdeProblem polynomial_problem(Real t_end);

struct NmrParams
{
    Real nu = 5000.0;
    Real alpha = 0.05;
    Real beta = 3450.0;
    Real gamma = 3450.0;
    Real t_end = 1e-2;
    /// Number of equal subintervals and which one to pose the problem on.
    Index split = 1;
    Index piece = 0;
};

/// u' = -2 pi i (alpha + beta cos(2 pi nu tau) + gamma cos(4 pi nu tau)) u,
/// restricted to piece `piece` of [0, t_end] cut into `split` parts, u = 1 at
/// the left end of that piece.
[[nodiscard]] OdeProblem nmr_problem(const NmrParams& params);

/// u' = c u on [-1, 1]; u = exp(c (t + 1)).
[[nodiscard]] OdeProblem constant_problem(Complex c);

/// u' = f u with f parsed from `expression` in the variable t; no exact solution.
[[nodiscard]] OdeProblem expression_problem(const std::string& expression, Interval interval = {});

} // namespace legspec
