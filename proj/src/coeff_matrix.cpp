#include "legspec/coeff_matrix.hpp"

#include <cmath>
#include <vector>

#include "legspec/triple_product.hpp"

namespace legspec
{

CoeffMatrix assemble(const LegendreSeries& series, Index size)
{
    if (size < 1)
        throw SizeError("assemble: size must be >= 1");
    if (series.size() < 1)
        throw SizeError("assemble: empty series");
    const Index n = series.degree();
    const Index M = size;

    // Contract the coefficients into the Hankel o Toeplitz generator first:
    //   G(k, j) = sum_d alpha_d sqrt(2d+1) h(d, k+j) t(d, |k-j|),  j in [0, M]
    // then F(k, l) = sqrt(2k+1)/sqrt(2l+1) (G(k, l+1) -/+ G(k, l-1)).
    const std::vector<Real> g = central_binomial_table((n + 2 * M) / 2 + 2);
    std::vector<Real> inv_gs(g.size());
    for (std::size_t s = 0; s < g.size(); ++s)
        inv_gs[s] = 1.0 / (g[s] * (2.0 * Real(s) + 1.0));
    std::vector<Complex> weight(static_cast<std::size_t>(n + 1));
    for (Index d = 0; d <= n; ++d)
        weight[d] = series.coeffs(d) * std::sqrt((2.0 * d + 1.0) / 2.0);

    const Index width = 2 * n + 1;
    ComplexMatrix gen = ComplexMatrix::Zero(width, M); // gen(j - k + n, k)
    for (Index k = 0; k < M; ++k)
    {
        const Index j_lo = std::max<Index>(0, k - n);
        const Index j_hi = std::min<Index>(M, k + n);
        for (Index j = j_lo; j <= j_hi; ++j)
        {
            const Index gap = std::abs(k - j);
            const Index d_hi = std::min(n, k + j);
            Complex acc(0);
            for (Index d = gap; d <= d_hi; d += 2)
            {
                const Index s = (d + k + j) / 2;
                const Real h = g[s - d] * inv_gs[s];
                const Real t = g[(d + gap) / 2] * g[(d - gap) / 2];
                acc += weight[d] * (h * t);
            }
            gen(j - k + n, k) = acc;
        }
    }
    auto at = [&](Index k, Index j) -> Complex {
        const Index off = j - k + n;
        return (off < 0 || off >= width) ? Complex(0) : gen(off, k);
    };

    CoeffMatrix out;
    out.matrix = ComplexBandedMatrix(M, n + 1, n + 1);
    out.series = series;
    out.N = n;
    out.M = M;
    for (Index l = 0; l < M; ++l)
    {
        const Real col = 1.0 / std::sqrt(2.0 * l + 1.0);
        for (Index k = out.matrix.row_begin(l); k < out.matrix.row_end(l); ++k)
        {
            const Complex z = l == 0 ? at(k, 1) + at(k, 0) : at(k, l + 1) - at(k, l - 1);
            out.matrix.coeffRef(k, l) = std::sqrt(2.0 * k + 1.0) * col * z;
        }
    }
    return out;
}

Real default_bandwidth_tolerance(const LegendreSeries& series)
{
    return kMachineEps * series.l1_norm();
}

Index bandwidth_for_tolerance(const LegendreSeries& series, Real delta_tol, TailWeight weight)
{
    if (!(delta_tol > 0.0))
        throw DomainError("bandwidth_for_tolerance: tolerance must be positive");
    const Index degree = std::max<Index>(series.degree(), 0);
    // Running tail from the top down: tail(n) = tail(n+1) + w |alpha_{n+1}|.
    std::vector<Real> tail(static_cast<std::size_t>(degree + 1));
    Real acc = series.decay ? series.decay->tail_sum(degree + 1, weight) : 0.0;
    for (Index n = degree; n >= 0; --n)
    {
        tail[n] = acc;
        acc += std::abs(series.coeffs(n)) * tail_weight(weight, n);
    }
    for (Index n = 0; n <= degree; ++n)
        if (tail[n] <= delta_tol)
            return n;
    return degree;
}

CoeffMatrix underline_truncate(const CoeffMatrix& f)
{
    if (f.M <= f.N + 1)
        throw SizeError("underline_truncate: need M > N + 1 (M = " + std::to_string(f.M) +
                        ", N = " + std::to_string(f.N) + ")");
    CoeffMatrix out = f;
    for (Index i = f.M - f.N - 1; i < f.M; ++i)
        out.matrix.set_row_zero(i);
    out.underlined = true;
    return out;
}

RealBandedMatrix underline_theta(const RealBandedMatrix& theta)
{
    RealBandedMatrix out = theta;
    if (out.size() > 0)
        out.set_row_zero(out.size() - 1);
    return out;
}

} // namespace legspec
