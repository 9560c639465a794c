#pragma once

#include "legspec/solver.hpp"

namespace legspec
{

///
/// Independent references for tests. The scalar ODE is solved exactly by
/// u(t) = exp(int_{-1}^t f); this does not carry over to matrix-valued f,
/// where the factors no longer commute.
///

/// int_{-1}^{t} p_l(s) ds in closed form (a combination of p_{l-1}, p_{l+1}).
[[nodiscard]] Real legendre_antiderivative(Index l, Real t);

/// int int_{s < t} f(t) p_k(t) p_l(s) ds dt: inner integral in closed form,
/// outer by adaptive Gauss-Legendre to 1e-13.
[[nodiscard]] Complex fourier_coeff_reference(const ScalarFunction& f, Index k, Index l);

/// Same coefficient by nested Gauss-Legendre quadrature over the triangle,
/// with no closed forms at all.
[[nodiscard]] Complex fourier_coeff_numeric(const ScalarFunction& f, Index k, Index l, Index nodes = 96);

/// exp(int_a^tau f) on the problem's own interval, by adaptive quadrature.
[[nodiscard]] Complex quadrature_solution(const OdeProblem& problem, Real tau);

/// Registered exact solution if present, otherwise quadrature_solution.
[[nodiscard]] Complex reference_solution(const OdeProblem& problem, Real tau);

} // namespace legspec
