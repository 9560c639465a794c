#include "legspec/oracle.hpp"

#include <cmath>

#include "legspec/quadrature.hpp"

namespace legspec
{

Real legendre_antiderivative(Index l, Real t)
{
    if (l < 0)
        throw DomainError("legendre_antiderivative: negative degree");
    if (l == 0)
        return eval_legendre(1, t) / std::sqrt(3.0) + eval_legendre(0, t);
    return (eval_legendre(l + 1, t) / std::sqrt(2.0 * l + 3.0) - eval_legendre(l - 1, t) / std::sqrt(2.0 * l - 1.0)) /
           std::sqrt(2.0 * l + 1.0);
}

Complex fourier_coeff_reference(const ScalarFunction& f, Index k, Index l)
{
    auto integrand = [&](Real t) { return f(t) * eval_legendre(k, t) * legendre_antiderivative(l, t); };
    return integrate_adaptive(integrand, -1.0, 1.0, 1e-13);
}

Complex fourier_coeff_numeric(const ScalarFunction& f, Index k, Index l, Index nodes)
{
    const GaussLegendreRule rule = gauss_legendre(nodes);
    Complex total(0);
    for (Index i = 0; i < rule.size(); ++i)
    {
        const Real t = static_cast<Real>(rule.nodes[i]);
        const Real half = (t + 1.0) / 2.0;
        Real inner = 0.0;
        for (Index j = 0; j < rule.size(); ++j)
        {
            const Real s = -1.0 + half * (static_cast<Real>(rule.nodes[j]) + 1.0);
            inner += static_cast<Real>(rule.weights[j]) * eval_legendre(l, s);
        }
        total += static_cast<Real>(rule.weights[i]) * f(t) * eval_legendre(k, t) * (half * inner);
    }
    return total;
}

Complex quadrature_solution(const OdeProblem& problem, Real tau)
{
    if (tau == problem.interval.a)
        return 1.0;
    return std::exp(integrate_adaptive(problem.f, problem.interval.a, tau, 1e-14, 1 << 16));
}

Complex reference_solution(const OdeProblem& problem, Real tau)
{
    if (problem.exact)
        return (*problem.exact)(tau);
    return quadrature_solution(problem, tau);
}

} // namespace legspec
