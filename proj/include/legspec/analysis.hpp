#pragma once

#include <vector>

#include "legspec/coeff_matrix.hpp"

namespace legspec
{

/// max_k sum_l (|a_kl| + |a_lk|) / 2, an upper bound on the numerical radius.
[[nodiscard]] Real numerical_radius_bound(const ComplexBandedMatrix& a);
[[nodiscard]] Real numerical_radius_bound(const CoeffMatrix& f);

///
/// Lower estimate of the numerical radius: the largest eigenvalue of the
/// Hermitian part of exp(-i theta) A, maximized over an equispaced theta
/// grid and then refined by golden-section search around the best node.
/// Eigenvalues come from restarted Lanczos, warm-started across theta.
/// Throws ConvergenceError if an eigenvalue iteration stalls.
///
[[nodiscard]] Real numerical_radius_estimate(const ComplexBandedMatrix& a, Index theta_count = 64);
[[nodiscard]] Real numerical_radius_estimate(const CoeffMatrix& f, Index theta_count = 64);

/// Numerical abscissa max Re W(A): the largest eigenvalue of (A + A^H) / 2.
/// I - A is invertible whenever this is below 1. It is the theta = 0 member
/// of the grid above, so it never exceeds numerical_radius_estimate.
[[nodiscard]] Real numerical_abscissa(const ComplexBandedMatrix& a);
[[nodiscard]] Real numerical_abscissa(const CoeffMatrix& f);

/// Off-diagonal decay of a matrix inverse.
struct DecayProfile
{
    /// max |inv(k, l)| over |k - l| = j.
    RealVector diagonal_max;
    /// Unit of band distance (N + 1 for a coefficient matrix).
    Index band_unit = 1;
    /// Fit diagonal_max(j) <= constant * mu^(j / band_unit); constant is
    /// raised until the bound holds at every recorded diagonal.
    Real mu = 0.0;
    Real constant = 0.0;
    /// Largest j with diagonal_max(j) > threshold (0 if only the diagonal survives).
    Index K = 0;
    Real threshold = 0.0;
};

/// Fit and K for an already collected per-diagonal maximum.
[[nodiscard]] DecayProfile fit_decay_profile(RealVector diagonal_max, Index band_unit, Real threshold);

/// Profile of (I - A)^{-1}, every column by a banded solve. `delta_tol` is
/// absolute. Throws SingularSystemError when I - A does not factorize.
[[nodiscard]] DecayProfile resolvent_decay_profile(const ComplexBandedMatrix& a, Index band_unit,
                                                   Real delta_tol = kMachineEps);
[[nodiscard]] DecayProfile resolvent_decay_profile(const CoeffMatrix& f, Real delta_tol = kMachineEps);

/// Same profile from a few interior columns only; the threshold is
/// relative to the largest sampled entry. Cheap enough for large M.
[[nodiscard]] DecayProfile sampled_resolvent_profile(const ComplexBandedMatrix& a, Index band_unit,
                                                     Real delta_tol = kMachineEps, Index samples = 3);

///
/// Numerical bandwidth of the leading `block` x `block` part of D^{-1}, where
/// D is the trailing part of I - A starting at row/column `offset`. D is
/// approximated by rows offset .. A.size()-1, so A should be several times
/// larger than offset + block.
///
[[nodiscard]] Index trailing_inverse_bandwidth(const ComplexBandedMatrix& a, Index offset, Index block,
                                               Real delta_tol = kMachineEps);

///
/// How far the last `columns` columns of (I - A)^{-1} reach above their
/// diagonal: the largest j - k with |inv(k, j)| > delta_tol * peak, where peak
/// is the largest entry of those columns. A perturbation confined to the last
/// rows of the system spreads this far up into the solution.
///
[[nodiscard]] Index trailing_column_reach(const ComplexBandedMatrix& a, Index columns,
                                          Real delta_tol = kMachineEps);

/// M - N - K - 2, or 0 when that is not positive.
[[nodiscard]] Index predicted_accurate_entries(Index M, Index N, Index K);

/// max |u - u_hat| / max |u| over exactly 10 M equidistant nodes in [-1, 1].
[[nodiscard]] Real err_f(const ComplexVector& approx, const ScalarFunction& exact, Index M);

/// |c - c_hat| / max |c|, the shorter vector padded with zeros. Throws
/// DomainError when c is identically zero.
[[nodiscard]] RealVector err_c(const ComplexVector& approx, const ComplexVector& exact);

inline constexpr Real kConjectureThreshold = 1.1494;

struct ConjectureCheck
{
    Real coefficient_sum = 0.0;
    bool satisfied = true;
};

/// sum_{d <= N} |alpha_d| against the 1.1494 threshold (advisory only).
[[nodiscard]] ConjectureCheck conjecture_check(const LegendreSeries& series);

} // namespace legspec
