#pragma once

#include <optional>
#include <vector>

#include "legspec/types.hpp"

namespace legspec
{

/// Weight applied to |alpha_d| when summing a coefficient tail.
enum class TailWeight
{
    Unit,         ///< sum |alpha_d|
    LegendreSup,  ///< sum |alpha_d| sqrt((2d+1)/2): sup-norm truncation error of the series
    NormBound,    ///< sum |alpha_d| (3d+2): worst-case ||B^(d)||_inf bound
};

[[nodiscard]] Real tail_weight(TailWeight w, Index d);

///
/// Geometric model |alpha_d| ~ constant * rho^(-d-1) fitted to the decaying
/// end of a coefficient vector (least squares in log scale, so an estimate
/// rather than a strict bound). rho = +inf encodes a finite expansion.
///
struct DecayFit
{
    Real constant = 0.0;
    Real rho = std::numeric_limits<Real>::infinity();

    [[nodiscard]] Real bound(Index d) const;

    /// sum_{d >= from} constant * rho^(-d-1) * weight(d); +inf if rho <= 1.
    [[nodiscard]] Real tail_sum(Index from, TailWeight weight) const;
};

/// Fit the running envelope on the last few (at most 10, at most half) of
/// coeffs[0 .. count], where
/// `count` is the chop point (the first plateau entry is included so that
/// finite expansions get a steep fit).
[[nodiscard]] DecayFit fit_geometric_decay(const ComplexVector& coeffs, Index count);

/// Coefficients alpha_0..alpha_N in the orthonormal Legendre basis.
struct LegendreSeries
{
    ComplexVector coeffs;
    Interval interval;
    /// Envelope of the coefficients dropped past coeffs.size(); empty means
    /// the stored coefficients are the whole expansion.
    std::optional<DecayFit> decay;

    [[nodiscard]] Index size() const { return coeffs.size(); }
    [[nodiscard]] Index degree() const { return coeffs.size() - 1; }
    [[nodiscard]] Real l1_norm() const { return coeffs.cwiseAbs().sum(); }

    /// Sum of weighted |alpha_d| for d > n, stored entries plus fitted tail.
    [[nodiscard]] Real tail(Index n, TailWeight weight) const;

    /// First n + 1 coefficients (n clamped to the stored degree).
    [[nodiscard]] LegendreSeries truncated(Index n) const;
};

/// Values of a series (or any function) sampled on a grid in [-1, 1].
struct EvalGrid
{
    RealVector nodes;
    ComplexVector values;
};

/// Orthonormal Legendre polynomial p_k(t), int p_k^2 = 1.
[[nodiscard]] Real eval_legendre(Index k, Real t);

/// [p_0(t), ..., p_{M-1}(t)].
[[nodiscard]] RealVector phi_vector(Index size, Real t);

/// Clenshaw summation of sum_d coeffs[d] p_d(t).
[[nodiscard]] Complex eval_series(const ComplexVector& coeffs, Real t);
[[nodiscard]] Complex eval_series(const LegendreSeries& series, Real t);

/// `count` equidistant nodes from -1 to 1 (inclusive), count >= 2.
[[nodiscard]] RealVector equidistant_nodes(Index count);

[[nodiscard]] EvalGrid sample_series(const ComplexVector& coeffs, Index count);

/// Number of coefficients to keep: the smallest k such that the running
/// maximum of |coeffs[i]|, i >= k, is <= tol * max|coeffs|. Returns the full
/// length when the tail never drops that low, and 0 for an all-zero vector.
[[nodiscard]] Index chop_series(const ComplexVector& coeffs, Real tol);

/// alpha_d ~ int f p_d for d < n from an n-point Gauss-Legendre rule; these
/// are exactly the coefficients of the interpolant through the n nodes.
[[nodiscard]] ComplexVector discrete_legendre_transform(const ScalarFunction& f, Index n);

struct ExpandOptions
{
    Index initial_nodes = 64;
    /// Upper limit on the node count (and so on N) before giving up.
    Index max_nodes = 16384;
};

///
/// Legendre expansion of f on [-1, 1] to relative tolerance tol.
///
/// The node count doubles from `initial_nodes` until the last quarter of the
/// transform is down at rounding-noise level. Coefficients are kept above
/// max(tol, noise) * max|alpha|, then the kept degree N is the smallest
/// for which the estimated sup-norm truncation error
/// sum_{d>N} |alpha_d| sqrt((2d+1)/2) is at most tol * max|alpha|.
///
[[nodiscard]] LegendreSeries expand_function(const ScalarFunction& f, Real tol,
                                             const ExpandOptions& options = {});

} // namespace legspec
