#include "legspec/basis_matrix.hpp"

#include <cmath>

#include "legspec/triple_product.hpp"

namespace legspec
{

RealBandedMatrix basis_matrix_dense(Index degree, Index size)
{
    if (degree < 0)
        throw DomainError("basis_matrix_dense: negative degree");
    if (size < 1)
        throw SizeError("basis_matrix_dense: size must be >= 1");
    RealBandedMatrix out(size, degree + 1, degree + 1);
    const Real inv_sqrt3 = 1.0 / std::sqrt(3.0);
    for (Index l = 0; l < size; ++l)
    {
        for (Index k = out.row_begin(l); k < out.row_end(l); ++k)
        {
            Real value;
            if (l == 0)
                value = triple_product(degree, k, 1) * inv_sqrt3 + triple_product(degree, k, 0);
            else
                value = (triple_product(degree, k, l + 1) / std::sqrt(2.0 * l + 3.0) -
                         triple_product(degree, k, l - 1) / std::sqrt(2.0 * l - 1.0)) /
                        std::sqrt(2.0 * l + 1.0);
            out.coeffRef(k, l) = value;
        }
    }
    return out;
}

StructuredBasisFactors::StructuredBasisFactors(Index degree, Index size)
    : m_degree(degree), m_size(size)
{
    if (degree < 0)
        throw DomainError("StructuredBasisFactors: negative degree");
    if (size < 1)
        throw SizeError("StructuredBasisFactors: size must be >= 1");
    // H o T is M x (M+1): gamma = k + j ranges up to 2M - 1.
    for (Index gamma = degree; gamma <= 2 * size - 1; gamma += 2)
        m_hankel.push_back(hankel_entry(degree, gamma));
    for (Index alpha = degree % 2; alpha <= std::min(degree, size); alpha += 2)
        m_toeplitz.push_back(toeplitz_entry(degree, alpha));
}

Real StructuredBasisFactors::hankel_value(Index gamma) const
{
    if (gamma < m_degree || (gamma - m_degree) % 2 != 0)
        return 0.0;
    const auto i = static_cast<std::size_t>((gamma - m_degree) / 2);
    return i < m_hankel.size() ? m_hankel[i] : 0.0;
}

Real StructuredBasisFactors::toeplitz_value(Index alpha) const
{
    if (alpha < 0 || alpha > m_degree || (alpha - m_degree) % 2 != 0)
        return 0.0;
    const auto i = static_cast<std::size_t>((alpha - m_degree % 2) / 2);
    return i < m_toeplitz.size() ? m_toeplitz[i] : 0.0;
}

Real StructuredBasisFactors::hankel_toeplitz(Index k, Index j) const
{
    return hankel_value(k + j) * toeplitz_value(std::abs(k - j));
}

RealVector StructuredBasisFactors::hankel_first_column() const
{
    RealVector out(m_size + 1);
    for (Index b = 0; b <= m_size; ++b)
        out(b) = hankel_entry(m_degree, b);
    return out;
}

RealVector StructuredBasisFactors::hankel_last_row() const
{
    RealVector out(m_size + 1);
    for (Index c = 0; c <= m_size; ++c)
        out(c) = hankel_entry(m_degree, m_size + c);
    return out;
}

RealVector StructuredBasisFactors::toeplitz_first_column() const
{
    RealVector out(m_size + 1);
    for (Index alpha = 0; alpha <= m_size; ++alpha)
        out(alpha) = toeplitz_value(alpha);
    return out;
}

Index StructuredBasisFactors::stored_numbers() const
{
    return static_cast<Index>(m_hankel.size() + m_toeplitz.size());
}

RealBandedMatrix StructuredBasisFactors::materialize() const
{
    RealBandedMatrix out(m_size, m_degree + 1, m_degree + 1);
    const Real root = std::sqrt(2.0 * m_degree + 1.0);
    for (Index l = 0; l < m_size; ++l)
    {
        const Real col_scale = root / std::sqrt(2.0 * l + 1.0);
        for (Index k = out.row_begin(l); k < out.row_end(l); ++k)
        {
            // ((H o T) Z)_{k,l}
            Real ht = hankel_toeplitz(k, l + 1);
            ht += l == 0 ? hankel_toeplitz(k, 0) : -hankel_toeplitz(k, l - 1);
            out.coeffRef(k, l) = col_scale * std::sqrt(2.0 * k + 1.0) * ht;
        }
    }
    return out;
}

StructuredBasisFactors basis_matrix_structured(Index degree, Index size)
{
    return StructuredBasisFactors(degree, size);
}

RealBandedMatrix theta_matrix(Index size)
{
    RealBandedMatrix t = basis_matrix_dense(0, size);
    t *= std::sqrt(2.0);
    return t;
}

} // namespace legspec
