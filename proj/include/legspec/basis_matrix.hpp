#pragma once

#include <vector>

#include "legspec/banded_matrix.hpp"

namespace legspec
{

///
/// Legendre basis matrix B^(d)_M: the M x M leading block of the coefficient
/// matrix of p_d(t) Theta(t - s). Entry (k, l) is
///
///   l = 0:  F_{d,k,1} / sqrt(3) + F_{d,k,0}
///   l > 0:  (F_{d,k,l+1} / sqrt(2l+3) - F_{d,k,l-1} / sqrt(2l-1)) / sqrt(2l+1)
///
/// and vanishes for |k - l| > d + 1, so the result has bandwidth d + 1.
///
[[nodiscard]] RealBandedMatrix basis_matrix_dense(Index degree, Index size);

///
/// Hadamard-structured form of B^(d)_M:
///
///   B = sqrt(2d+1) * ( Ctilde o ((H o T) Z) )
///
/// with H the (M x (M+1)) Hankel block h(d, k + j), T the Toeplitz block
/// t(d, |k - j|), Ctilde_{k,l} = sqrt(2k+1)/sqrt(2l+1) and Z the (M+1) x M
/// difference operator (Z_{l+1,l} = 1, Z_{l-1,l} = -1, Z_{0,0} = 1).
///
/// Only the admissible (nonzero) generator entries are stored:
/// h(d, gamma) for gamma = d, d+2, ..., <= 2M-1 and t(d, alpha) for
/// alpha = d mod 2, ..., d (clipped to alpha <= M).
///
class StructuredBasisFactors
{
public:
    StructuredBasisFactors(Index degree, Index size);

    [[nodiscard]] Index degree() const { return m_degree; }
    [[nodiscard]] Index size() const { return m_size; }

    /// h(d, gamma); zero outside the stored admissible set.
    [[nodiscard]] Real hankel_value(Index gamma) const;
    /// t(d, alpha); zero outside the stored admissible set.
    [[nodiscard]] Real toeplitz_value(Index alpha) const;

    /// Entry (k, j) of H o T, k in [0, M), j in [0, M].
    [[nodiscard]] Real hankel_toeplitz(Index k, Index j) const;

    /// First column of the (M+1) x (M+1) Hankel matrix (c = 0, b = 0..M);
    /// starts with a zero block of length d.
    [[nodiscard]] RealVector hankel_first_column() const;
    /// Last row of the (M+1) x (M+1) Hankel matrix (b = M, c = 0..M).
    [[nodiscard]] RealVector hankel_last_row() const;
    /// First column of the symmetric (M+1) x (M+1) Toeplitz matrix; ends with
    /// a zero block of length M - d when d < M.
    [[nodiscard]] RealVector toeplitz_first_column() const;

    /// Numbers actually held by this object (compact generators).
    [[nodiscard]] Index stored_numbers() const;
    /// Numbers held if c_H, r_H and c_T were stored in full (3 (M+1)).
    [[nodiscard]] Index generator_numbers() const { return 3 * (m_size + 1); }

    [[nodiscard]] RealBandedMatrix materialize() const;

private:
    Index m_degree;
    Index m_size;
    std::vector<Real> m_hankel;   // h(d, d + 2i)
    std::vector<Real> m_toeplitz; // t(d, (d % 2) + 2i)
};

[[nodiscard]] StructuredBasisFactors basis_matrix_structured(Index degree, Index size);

/// Coefficient matrix T_M of Theta(t - s): sqrt(2) * B^(0)_M, tridiagonal.
[[nodiscard]] RealBandedMatrix theta_matrix(Index size);

/// Upper bound 3d + 2 on ||B^(d)||_inf.
[[nodiscard]] constexpr Real basis_matrix_inf_norm_bound(Index degree)
{
    return 3.0 * Real(degree) + 2.0;
}

} // namespace legspec
