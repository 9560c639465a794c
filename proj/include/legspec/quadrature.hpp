#pragma once

#include <vector>

#include "legspec/types.hpp"

namespace legspec
{

/// Gauss-Legendre rule on [-1, 1], nodes ascending. Kept in long double so the
/// discrete Legendre transform built on it stays well below double rounding.
struct GaussLegendreRule
{
    std::vector<long double> nodes;
    std::vector<long double> weights;

    [[nodiscard]] Index size() const { return static_cast<Index>(nodes.size()); }
};

/// n-point Gauss-Legendre rule (exact for polynomials of degree 2n - 1).
/// Newton iteration on the three-term recurrence; O(n^2).
GaussLegendreRule gauss_legendre(Index n);

/// Integral of f over [a, b] with an n-point rule.
Complex integrate(const ScalarFunction& f, Real a, Real b, Index n);

/// Adaptive integral of f over [a, b]: doubles the node count (starting at
/// 32) until two successive estimates agree within tol relative to the larger
/// of 1, |integral| and the integral of |f|. Throws ConvergenceError past max_nodes.
Complex integrate_adaptive(const ScalarFunction& f, Real a, Real b, Real tol = 1e-13,
                           Index max_nodes = 8192);

} // namespace legspec
