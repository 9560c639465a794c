#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "legspec/types.hpp"

namespace legspec
{

///
/// Square banded matrix with lower bandwidth `kl` and upper bandwidth `ku`.
///
/// Storage is diagonal-major (LAPACK `gb` layout): entry (i, j) with
/// -kl <= j - i <= ku lives at `band(ku + i - j, j)`. Reads outside the band
/// return an exact zero.
///
template <typename Scalar>
class BandedMatrix
{
public:
    using RealScalar = typename Eigen::NumTraits<Scalar>::Real;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Storage = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    BandedMatrix() = default;

    BandedMatrix(Index size, Index lower, Index upper)
        : m_size(size), m_lower(lower), m_upper(upper)
    {
        if (size < 1)
            throw SizeError("BandedMatrix: size must be >= 1");
        if (lower < 0 || upper < 0)
            throw SizeError("BandedMatrix: bandwidths must be non-negative");
        m_lower = std::min(lower, size - 1);
        m_upper = std::min(upper, size - 1);
        m_band = Storage::Zero(m_lower + m_upper + 1, size);
    }

    static BandedMatrix identity(Index size)
    {
        BandedMatrix out(size, 0, 0);
        out.m_band.setOnes();
        return out;
    }

    [[nodiscard]] Index rows() const { return m_size; }
    [[nodiscard]] Index cols() const { return m_size; }
    [[nodiscard]] Index size() const { return m_size; }
    [[nodiscard]] Index lower() const { return m_lower; }
    [[nodiscard]] Index upper() const { return m_upper; }
    [[nodiscard]] Index bandwidth() const { return std::max(m_lower, m_upper); }

    [[nodiscard]] bool in_band(Index i, Index j) const
    {
        return j - i <= m_upper && i - j <= m_lower;
    }

    [[nodiscard]] Scalar operator()(Index i, Index j) const
    {
        if (!in_band(i, j))
            return Scalar(0);
        return m_band(m_upper + i - j, j);
    }

    /// Writable reference; (i, j) must lie inside the band.
    Scalar& coeffRef(Index i, Index j)
    {
        eigen_assert(in_band(i, j));
        return m_band(m_upper + i - j, j);
    }

    [[nodiscard]] const Storage& band_storage() const { return m_band; }

    template <typename OtherScalar>
    [[nodiscard]] BandedMatrix<OtherScalar> cast() const
    {
        BandedMatrix<OtherScalar> out(m_size, m_lower, m_upper);
        for (Index j = 0; j < m_size; ++j)
            for (Index i = row_begin(j); i < row_end(j); ++i)
                out.coeffRef(i, j) = OtherScalar((*this)(i, j));
        return out;
    }

    /// First/one-past-last row index of the band in column j.
    [[nodiscard]] Index row_begin(Index j) const { return std::max<Index>(0, j - m_upper); }
    [[nodiscard]] Index row_end(Index j) const { return std::min<Index>(m_size, j + m_lower + 1); }

    /// this += alpha * other (other's band must fit inside this band).
    template <typename OtherScalar>
    BandedMatrix& add_scaled(const Scalar& alpha, const BandedMatrix<OtherScalar>& other)
    {
        if (other.size() != m_size)
            throw SizeError("BandedMatrix::add_scaled: size mismatch");
        if (other.lower() > m_lower || other.upper() > m_upper)
            throw SizeError("BandedMatrix::add_scaled: band of operand exceeds target band");
        for (Index j = 0; j < m_size; ++j)
            for (Index i = other.row_begin(j); i < other.row_end(j); ++i)
                coeffRef(i, j) += alpha * Scalar(other(i, j));
        return *this;
    }

    BandedMatrix& operator*=(const Scalar& alpha)
    {
        m_band *= alpha;
        return *this;
    }

    void set_row_zero(Index i)
    {
        for (Index j = std::max<Index>(0, i - m_lower); j <= std::min<Index>(m_size - 1, i + m_upper); ++j)
            coeffRef(i, j) = Scalar(0);
    }

    template <typename Derived>
    [[nodiscard]] Vector operator*(const Eigen::MatrixBase<Derived>& x) const
    {
        if (x.size() != m_size)
            throw SizeError("BandedMatrix: matrix-vector size mismatch");
        Vector y = Vector::Zero(m_size);
        for (Index j = 0; j < m_size; ++j)
        {
            const Scalar xj = x(j);
            for (Index i = row_begin(j); i < row_end(j); ++i)
                y(i) += m_band(m_upper + i - j, j) * xj;
        }
        return y;
    }

    /// y = A^H x
    template <typename Derived>
    [[nodiscard]] Vector adjoint_times(const Eigen::MatrixBase<Derived>& x) const
    {
        Vector y = Vector::Zero(m_size);
        for (Index j = 0; j < m_size; ++j)
        {
            Scalar acc(0);
            for (Index i = row_begin(j); i < row_end(j); ++i)
                acc += Eigen::numext::conj(m_band(m_upper + i - j, j)) * x(i);
            y(j) = acc;
        }
        return y;
    }

    [[nodiscard]] Dense to_dense() const
    {
        Dense out = Dense::Zero(m_size, m_size);
        for (Index j = 0; j < m_size; ++j)
            for (Index i = row_begin(j); i < row_end(j); ++i)
                out(i, j) = (*this)(i, j);
        return out;
    }

    /// Maximum absolute row sum.
    [[nodiscard]] RealScalar inf_norm() const
    {
        Eigen::Matrix<RealScalar, Eigen::Dynamic, 1> rows =
            Eigen::Matrix<RealScalar, Eigen::Dynamic, 1>::Zero(m_size);
        for (Index j = 0; j < m_size; ++j)
            for (Index i = row_begin(j); i < row_end(j); ++i)
                rows(i) += std::abs((*this)(i, j));
        return rows.maxCoeff();
    }

    /// Largest |i - j| carrying an entry with |a_ij| > threshold (-1 if none).
    [[nodiscard]] Index numerical_bandwidth(RealScalar threshold = 0) const
    {
        Index bw = -1;
        for (Index j = 0; j < m_size; ++j)
            for (Index i = row_begin(j); i < row_end(j); ++i)
                if (std::abs((*this)(i, j)) > threshold)
                    bw = std::max(bw, std::abs(i - j));
        return bw;
    }

    /// Leading principal submatrix of order n.
    [[nodiscard]] BandedMatrix leading_block(Index n) const
    {
        if (n < 1 || n > m_size)
            throw SizeError("BandedMatrix::leading_block: invalid order");
        BandedMatrix out(n, m_lower, m_upper);
        for (Index j = 0; j < n; ++j)
            for (Index i = out.row_begin(j); i < out.row_end(j); ++i)
                out.coeffRef(i, j) = (*this)(i, j);
        return out;
    }

private:
    Index m_size = 0;
    Index m_lower = 0;
    Index m_upper = 0;
    Storage m_band;
};

///
/// LU factorization with partial (row) pivoting of a banded matrix, in the
/// style of LAPACK `gbtrf`: the upper band grows to kl + ku to hold fill-in.
///
template <typename Scalar>
class BandedLU
{
public:
    using RealScalar = typename Eigen::NumTraits<Scalar>::Real;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    BandedLU() = default;

    explicit BandedLU(const BandedMatrix<Scalar>& a, RealScalar pivot_tol = RealScalar(0)) { compute(a, pivot_tol); }

    /// Throws SingularSystemError if a pivot magnitude is <= pivot_tol * max|a_ij|
    /// (or exactly zero when pivot_tol is 0).
    BandedLU& compute(const BandedMatrix<Scalar>& a, RealScalar pivot_tol = RealScalar(0))
    {
        m_n = a.size();
        m_kl = a.lower();
        m_ku = a.upper();
        const Index ldab_upper = m_kl + m_ku; // rows above the diagonal after fill
        m_lu = Storage::Zero(2 * m_kl + m_ku + 1, m_n);
        m_perm.resize(m_n);

        RealScalar scale(0);
        for (Index j = 0; j < m_n; ++j)
            for (Index i = a.row_begin(j); i < a.row_end(j); ++i)
            {
                at(i, j) = a(i, j);
                scale = std::max(scale, std::abs(a(i, j)));
            }
        const RealScalar threshold = pivot_tol * scale;

        for (Index k = 0; k < m_n; ++k)
        {
            const Index last_row = std::min(m_n - 1, k + m_kl);
            Index p = k;
            RealScalar best = std::abs(at(k, k));
            for (Index i = k + 1; i <= last_row; ++i)
            {
                const RealScalar v = std::abs(at(i, k));
                if (v > best)
                {
                    best = v;
                    p = i;
                }
            }
            m_perm(k) = p;
            if (!(best > threshold) || best == RealScalar(0))
                throw SingularSystemError("BandedLU: pivot " + std::to_string(k) +
                                          " below singularity threshold");

            const Index last_col = std::min(m_n - 1, k + ldab_upper);
            if (p != k)
                for (Index j = k; j <= last_col; ++j)
                    std::swap(at(k, j), at(p, j));

            const Scalar pivot = at(k, k);
            for (Index i = k + 1; i <= last_row; ++i)
            {
                const Scalar l = at(i, k) / pivot;
                at(i, k) = l;
                if (l == Scalar(0))
                    continue;
                for (Index j = k + 1; j <= last_col; ++j)
                    at(i, j) -= l * at(k, j);
            }
        }
        return *this;
    }

    [[nodiscard]] Index size() const { return m_n; }

    template <typename Derived>
    [[nodiscard]] Vector solve(const Eigen::MatrixBase<Derived>& rhs) const
    {
        if (rhs.size() != m_n)
            throw SizeError("BandedLU::solve: size mismatch");
        Vector x = rhs.template cast<Scalar>();
        const Index ldab_upper = m_kl + m_ku;
        // Forward: apply P and L.
        for (Index k = 0; k < m_n; ++k)
        {
            const Index p = m_perm(k);
            if (p != k)
                std::swap(x(k), x(p));
            const Index last_row = std::min(m_n - 1, k + m_kl);
            for (Index i = k + 1; i <= last_row; ++i)
                x(i) -= at(i, k) * x(k);
        }
        // Backward: U.
        for (Index k = m_n - 1; k >= 0; --k)
        {
            const Index last_col = std::min(m_n - 1, k + ldab_upper);
            Scalar acc = x(k);
            for (Index j = k + 1; j <= last_col; ++j)
                acc -= at(k, j) * x(j);
            x(k) = acc / at(k, k);
        }
        return x;
    }

private:
    using Storage = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    // Working layout: row offset kl + ku + i - j, i.e. kl extra rows on top for fill.
    Scalar& at(Index i, Index j) { return m_lu(m_kl + m_ku + i - j, j); }
    [[nodiscard]] const Scalar& at(Index i, Index j) const { return m_lu(m_kl + m_ku + i - j, j); }

    Index m_n = 0;
    Index m_kl = 0;
    Index m_ku = 0;
    Storage m_lu;
    Eigen::Matrix<Index, Eigen::Dynamic, 1> m_perm;
};

using ComplexBandedMatrix = BandedMatrix<Complex>;
using RealBandedMatrix = BandedMatrix<Real>;

} // namespace legspec
