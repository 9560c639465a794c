#pragma once

// Shared helpers for the test suite. Everything here is written independently
// of the library internals so it can serve as a reference.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "legspec/types.hpp"

namespace testing_support
{

using legspec::Complex;
using legspec::Index;
using legspec::Real;

/// Classical Legendre P_k(t) via Bonnet's recurrence in long double, scaled to
/// the orthonormal normalization.
inline Real orthonormal_legendre(Index k, Real t)
{
    long double p0 = 1.0L, p1 = t;
    if (k == 0)
        return static_cast<Real>(std::sqrt(0.5L));
    for (Index n = 1; n < k; ++n)
    {
        const long double p2 = ((2.0L * n + 1.0L) * t * p1 - n * p0) / (n + 1.0L);
        p0 = p1;
        p1 = p2;
    }
    return static_cast<Real>(p1 * std::sqrt((2.0L * k + 1.0L) / 2.0L));
}

struct Rule
{
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

/// Gauss-Legendre rule from the eigen-decomposition of the Jacobi matrix
/// (Golub-Welsch), followed by one Newton polish of each node.
inline Rule golub_welsch(Index n)
{
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (Index k = 1; k < n; ++k)
    {
        const Real b = k / std::sqrt(4.0 * k * k - 1.0);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    Rule r;
    for (Index i = 0; i < n; ++i)
    {
        long double x = es.eigenvalues()(i);
        long double dp = 0;
        for (int it = 0; it < 3; ++it)
        {
            long double p0 = 1.0L, p1 = x;
            for (Index m = 1; m < n; ++m)
            {
                const long double p2 = ((2.0L * m + 1.0L) * x * p1 - m * p0) / (m + 1.0L);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            x -= p1 / dp;
        }
        r.nodes.push_back(static_cast<Real>(x));
        r.weights.push_back(static_cast<Real>(2.0L / ((1.0L - x * x) * dp * dp)));
    }
    return r;
}

template <typename F>
auto integrate(const Rule& r, F&& f)
{
    decltype(f(0.0)) acc{};
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * f(r.nodes[i]);
    return acc;
}

/// Deterministic generator for property tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Real uniform(std::mt19937_64& g, Real lo, Real hi)
{
    return std::uniform_real_distribution<Real>(lo, hi)(g);
}

inline Index uniform_index(std::mt19937_64& g, Index lo, Index hi)
{
    return std::uniform_int_distribution<Index>(lo, hi)(g);
}

inline Complex uniform_complex(std::mt19937_64& g)
{
    return {uniform(g, -1, 1), uniform(g, -1, 1)};
}

} // namespace testing_support
