#pragma once

#include <vector>

#include "legspec/types.hpp"

namespace legspec
{

/// Degrees of a triple product integral of Legendre polynomials.
struct TripleIndex
{
    Index a = 0;
    Index b = 0;
    Index c = 0;

    [[nodiscard]] Index sum() const { return a + b + c; }
    /// Whether the selection rules (parity, triangle) allow a nonzero integral.
    [[nodiscard]] bool admissible() const;
};

///
/// Normalized central binomial coefficient g(n) = C(2n, n) / 4^n.
///
/// Every closed form in this module factors through g: it lies in (0, 1] and
/// behaves like 1 / sqrt(pi n), so products of a few g values never overflow.
/// Values come from a lazily grown long-double table (thread-safe).
///
[[nodiscard]] Real central_binomial_normalized(Index n);

/// g(0..max_n) as a plain vector, for tight loops that should not touch the
/// shared table per lookup.
[[nodiscard]] std::vector<Real> central_binomial_table(Index max_n);

/// F_{a,b,c} = int p_a p_b p_c over [-1, 1] for orthonormal p_k.
/// Exactly 0.0 when a+b+c is odd or the triangle inequality fails.
[[nodiscard]] Real triple_product(Index a, Index b, Index c);

/// Same integral for Legendre polynomials normalized to P_k(1) = 1:
/// F_{a,b,c} * sqrt(8) / sqrt((2a+1)(2b+1)(2c+1)).
[[nodiscard]] Real triple_product_normalized(Index a, Index b, Index c);

/// Hankel generator h(a, gamma), gamma = b + c:
/// 1/(a+gamma+1) * prod_{j=1..a} (gamma-a+2j)/(gamma-a+2j-1).
/// Structural zero (0.0) when gamma < a or a + gamma is odd.
[[nodiscard]] Real hankel_entry(Index a, Index gamma);

/// Toeplitz generator t(a, alpha), alpha = |b - c|. With p = (a+alpha)/2 and
/// q = (a-alpha)/2 this equals g(p) g(q) / sqrt(2). Structural zero when
/// alpha > a or a + alpha is odd.
[[nodiscard]] Real toeplitz_entry(Index a, Index alpha);

} // namespace legspec
