#include "legspec/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace legspec
{

namespace
{

// P_n(x) and P_n'(x) for the classical Legendre polynomial.
void legendre_with_derivative(Index n, long double x, long double& p, long double& dp)
{
    long double p0 = 1.0L;
    long double p1 = x;
    if (n == 0)
    {
        p = 1.0L;
        dp = 0.0L;
        return;
    }
    for (Index k = 1; k < n; ++k)
    {
        const long double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0L);
}

// Rules are reused heavily by the adaptive routines; cache them.
std::shared_ptr<const GaussLegendreRule> cached_rule(Index n)
{
    static std::mutex mutex;
    static std::map<Index, std::shared_ptr<const GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    auto rule = std::make_shared<const GaussLegendreRule>(gauss_legendre(n));
    cache.emplace(n, rule);
    return rule;
}

} // namespace

GaussLegendreRule gauss_legendre(Index n)
{
    if (n < 1)
        throw SizeError("gauss_legendre: need at least one node");
    GaussLegendreRule rule;
    rule.nodes.assign(n, 0.0L);
    rule.weights.assign(n, 0.0L);
    const long double pi = std::numbers::pi_v<long double>;
    const Index half = (n + 1) / 2;
    for (Index i = 0; i < half; ++i)
    {
        // Tricomi initial guess for the i-th largest root.
        long double x = std::cos(pi * (i + 0.75L) / (n + 0.5L));
        long double p = 0, dp = 0;
        for (int it = 0; it < 100; ++it)
        {
            legendre_with_derivative(n, x, p, dp);
            const long double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) <= 4 * std::numeric_limits<long double>::epsilon())
                break;
        }
        legendre_with_derivative(n, x, p, dp);
        const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0L;
    return rule;
}

namespace
{

struct RuleSum
{
    Complex value;
    Real magnitude; // integral of |f|, the scale rounding errors live on
};

RuleSum integrate_with_magnitude(const ScalarFunction& f, Real a, Real b, Index n)
{
    const auto rule = cached_rule(n);
    const long double half = 0.5L * (static_cast<long double>(b) - a);
    const long double mid = 0.5L * (static_cast<long double>(b) + a);
    long double re = 0, im = 0, mag = 0;
    for (Index i = 0; i < n; ++i)
    {
        const Complex v = f(static_cast<Real>(mid + half * rule->nodes[i]));
        re += rule->weights[i] * v.real();
        im += rule->weights[i] * v.imag();
        mag += rule->weights[i] * std::abs(v);
    }
    return {{static_cast<Real>(half * re), static_cast<Real>(half * im)}, static_cast<Real>(std::abs(half) * mag)};
}

} // namespace

Complex integrate(const ScalarFunction& f, Real a, Real b, Index n)
{
    return integrate_with_magnitude(f, a, b, n).value;
}

Complex integrate_adaptive(const ScalarFunction& f, Real a, Real b, Real tol, Index max_nodes)
{
    Index n = 32;
    Complex prev = integrate(f, a, b, n);
    while (true)
    {
        n *= 2;
        if (n > max_nodes)
            throw ConvergenceError("integrate_adaptive: no convergence within " +
                                   std::to_string(max_nodes) + " nodes");
        const RuleSum cur = integrate_with_magnitude(f, a, b, n);
        if (std::abs(cur.value - prev) <= tol * std::max<Real>({1.0, std::abs(cur.value), cur.magnitude}))
            return cur.value;
        prev = cur.value;
    }
}

} // namespace legspec
