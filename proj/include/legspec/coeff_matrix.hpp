#pragma once

#include "legspec/banded_matrix.hpp"
#include "legspec/legendre.hpp"

namespace legspec
{

///
/// Leading M x M block of the coefficient matrix of f(t) Theta(t - s) for a
/// truncated expansion f = sum_{d <= N} alpha_d p_d, i.e.
/// sum_d alpha_d B^(d)_M. Bandwidth N + 1.
///
struct CoeffMatrix
{
    ComplexBandedMatrix matrix;
    LegendreSeries series;
    Index N = 0;
    Index M = 0;
    /// Whether the last N + 1 rows have been zeroed.
    bool underlined = false;
};

/// Assemble from every stored coefficient of `series` (N = series.degree()).
/// Throws SizeError when M < 1.
[[nodiscard]] CoeffMatrix assemble(const LegendreSeries& series, Index size);

/// Default truncation threshold: machine epsilon times sum |alpha_d|.
[[nodiscard]] Real default_bandwidth_tolerance(const LegendreSeries& series);

///
/// Smallest N with sum_{d > N} |alpha_d| w(d) <= delta_tol, counting the
/// fitted envelope past the stored coefficients. Clamped to the stored
/// degree when even the full series misses the threshold.
///
[[nodiscard]] Index bandwidth_for_tolerance(const LegendreSeries& series, Real delta_tol,
                                            TailWeight weight = TailWeight::Unit);

/// Zero rows M-N-1 .. M-1. Throws SizeError when M <= N + 1.
[[nodiscard]] CoeffMatrix underline_truncate(const CoeffMatrix& f);

/// Copy of T with its last row zeroed.
[[nodiscard]] RealBandedMatrix underline_theta(const RealBandedMatrix& theta);

} // namespace legspec
