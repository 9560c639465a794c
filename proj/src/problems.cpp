#include "legspec/problems.hpp"

#include <cmath>
#include <numbers>

#include "legspec/expression.hpp"

namespace legspec
{

namespace
{

constexpr Complex kI{0.0, 1.0};

} // namespace

OdeProblem toy_problem(Real omega, Real beta)
{
    if (beta == 0.0)
        throw DomainError("toy_problem: beta must be nonzero");
    OdeProblem p;
    p.name = "toy";
    p.f = [omega, beta](Real t) { return -kI * (omega / beta) * std::sin(omega * (t + 1.0)); };
    p.exact = [omega, beta](Real t) { return std::exp(-(kI / beta) * (1.0 - std::cos(omega * t + omega))); };
    return p;
}

OdeProblem polynomial_problem(Real t_end)
{
    if (!(t_end > 0.0))
        throw DomainError("polynomial_problem: t_end must be positive");
    OdeProblem p;
    p.name = "poly";
    p.interval = Interval{0.0, t_end};
    p.f = [](Real tau) { return -kI * tau; };
    p.exact = [](Real tau) { return std::exp(-kI * tau * tau / 2.0); };
    return p;
}

OdeProblem nmr_problem(const NmrParams& q)
{
    if (!(q.t_end > 0.0) || q.split < 1 || q.piece < 0 || q.piece >= q.split)
        throw DomainError("nmr_problem: need t_end > 0 and 0 <= piece < split");
    const Real two_pi = 2.0 * std::numbers::pi;
    const Real h = q.t_end / Real(q.split);
    OdeProblem p;
    p.name = "nmr";
    p.interval = Interval{h * Real(q.piece), h * Real(q.piece + 1)};
    p.f = [q, two_pi](Real tau) {
        return -two_pi * kI *
               (q.alpha + q.beta * std::cos(two_pi * q.nu * tau) + q.gamma * std::cos(2.0 * two_pi * q.nu * tau));
    };
    auto phase = [q, two_pi](Real tau) {
        return q.alpha * tau + q.beta * std::sin(two_pi * q.nu * tau) / (two_pi * q.nu) +
               q.gamma * std::sin(2.0 * two_pi * q.nu * tau) / (2.0 * two_pi * q.nu);
    };
    const Real a = p.interval.a;
    p.exact = [phase, a, two_pi](Real tau) { return std::exp(-two_pi * kI * (phase(tau) - phase(a))); };
    return p;
}

OdeProblem constant_problem(Complex c)
{
    OdeProblem p;
    p.name = "constant";
    p.f = [c](Real) { return c; };
    p.exact = [c](Real t) { return std::exp(c * (t + 1.0)); };
    return p;
}

OdeProblem expression_problem(const std::string& expression, Interval interval)
{
    OdeProblem p;
    p.name = "expression";
    p.interval = interval;
    p.f = parse_expression(expression);
    return p;
}

} // namespace legspec
