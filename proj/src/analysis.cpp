#include "legspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

namespace legspec
{

namespace
{

ComplexVector seeded_start(Index n)
{
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<Real> normal;
    ComplexVector v(n);
    for (Index i = 0; i < n; ++i)
        v(i) = Complex(normal(rng), normal(rng));
    return v.normalized();
}

struct RitzPair
{
    Real value = 0.0;
    ComplexVector vector;
};

// Below this order the Hermitian part is diagonalized densely.
constexpr Index kDenseEigenLimit = 160;

// Largest eigenvalue of the Hermitian part of phase * A by thick-restart
// Lanczos: the basis grows by one application per step and, when full, is
// cut back to the leading Ritz vectors. Keeping several of them matters
// because the top of the spectrum is usually clustered.
RitzPair largest_hermitian_part_eigen(const ComplexBandedMatrix& a, Complex phase, const ComplexVector& start,
                                      Real scale)
{
    const Index n = a.size();
    if (n <= kDenseEigenLimit)
    {
        const ComplexMatrix d = a.to_dense();
        const ComplexMatrix h = 0.5 * (phase * d + std::conj(phase) * d.adjoint());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
        return {eig.eigenvalues()(n - 1), eig.eigenvectors().col(n - 1)};
    }
    const Index m = std::min<Index>(n, 64);
    const Index keep = m / 4;
    const Real floor = std::max(scale, Real(1e-300));
    const Real tol = 1e-11 * floor;
    auto apply = [&](const ComplexVector& x) -> ComplexVector {
        return 0.5 * (phase * (a * x) + std::conj(phase) * a.adjoint_times(x));
    };

    ComplexMatrix v(n, m), w(n, m);
    Index filled = 0;
    ComplexVector next = start.normalized();
    Real previous = -std::numeric_limits<Real>::infinity();
    for (int cycle = 0; cycle < 20000; ++cycle)
    {
        // Grow by up to 8 vectors, then check the Ritz pair.
        bool exhausted = false;
        const Index target = std::min(m, filled + 8);
        while (filled < target)
        {
            ComplexVector q = next;
            for (int pass = 0; pass < 2; ++pass)
                q -= v.leftCols(filled) * (v.leftCols(filled).adjoint() * q);
            const Real norm = q.norm();
            if (norm <= 1e-12)
            {
                exhausted = true;
                break;
            }
            v.col(filled) = q / norm;
            w.col(filled) = apply(v.col(filled));
            next = w.col(filled);
            ++filled;
        }
        const ComplexMatrix h = v.leftCols(filled).adjoint() * w.leftCols(filled);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (h + h.adjoint()));
        const ComplexVector y = eig.eigenvectors().col(filled - 1);
        RitzPair out;
        out.value = eig.eigenvalues()(filled - 1);
        out.vector = v.leftCols(filled) * y;
        const ComplexVector residual = w.leftCols(filled) * y - out.value * out.vector;
        if (exhausted || residual.norm() <= tol)
        {
            out.vector.normalize();
            return out;
        }
        if (filled < m)
            continue;
        // Full basis: restart, unless the last restart gained nothing.
        if (out.value - previous <= 1e-14 * floor)
        {
            out.vector.normalize();
            return out;
        }
        previous = out.value;
        const Index k = std::min(keep, filled - 1);
        const ComplexMatrix ritz = eig.eigenvectors().rightCols(k);
        const ComplexMatrix v_keep = v.leftCols(filled) * ritz;
        const ComplexMatrix w_keep = w.leftCols(filled) * ritz;
        v.leftCols(k) = v_keep;
        w.leftCols(k) = w_keep;
        filled = k;
        next = residual;
    }
    throw ConvergenceError("numerical_radius_estimate: Lanczos iteration did not converge");
}

// `warm` carries the previous Ritz vector. A fixed random component is mixed
// in: for normal A that vector is an exact eigenvector at every angle, and a
// Krylov space started from it never sees the top eigenvalue.
Real hermitian_part_max(const ComplexBandedMatrix& a, Real theta, ComplexVector& warm, Real scale,
                        const ComplexVector& jitter)
{
    const ComplexVector start = warm + 1e-3 * jitter;
    const RitzPair pair = largest_hermitian_part_eigen(a, std::polar(1.0, -theta), start, scale);
    warm = pair.vector;
    return pair.value;
}

ComplexBandedMatrix identity_minus(const ComplexBandedMatrix& a)
{
    ComplexBandedMatrix out(a.size(), a.lower(), a.upper());
    out.add_scaled(Complex(-1.0), a);
    for (Index i = 0; i < a.size(); ++i)
        out.coeffRef(i, i) += 1.0;
    return out;
}

ComplexVector unit(Index n, Index j)
{
    ComplexVector e = ComplexVector::Zero(n);
    e(j) = 1.0;
    return e;
}

} // namespace

Real numerical_radius_bound(const ComplexBandedMatrix& a)
{
    const Index n = a.size();
    RealVector row = RealVector::Zero(n), col = RealVector::Zero(n);
    for (Index j = 0; j < n; ++j)
        for (Index i = a.row_begin(j); i < a.row_end(j); ++i)
        {
            const Real v = std::abs(a(i, j));
            row(i) += v;
            col(j) += v;
        }
    return n == 0 ? 0.0 : 0.5 * (row + col).maxCoeff();
}

Real numerical_radius_bound(const CoeffMatrix& f)
{
    return numerical_radius_bound(f.matrix);
}

Real numerical_radius_estimate(const ComplexBandedMatrix& a, Index theta_count)
{
    if (theta_count < 8)
        throw DomainError("numerical_radius_estimate: theta_count must be >= 8");
    const Index n = a.size();
    if (n == 0)
        return 0.0;
    const Real scale = numerical_radius_bound(a);
    if (scale == 0.0)
        return 0.0;

    const Real two_pi = 2.0 * std::numbers::pi;
    const Real step = two_pi / Real(theta_count);
    const ComplexVector jitter = seeded_start(n);
    ComplexVector warm = jitter;
    Real best = -std::numeric_limits<Real>::infinity();
    Real best_theta = 0.0;
    for (Index i = 0; i < theta_count; ++i)
    {
        const Real theta = step * Real(i);
        const Real value = hermitian_part_max(a, theta, warm, scale, jitter);
        if (value > best)
        {
            best = value;
            best_theta = theta;
        }
    }

    // Golden-section refinement on [best - step, best + step].
    const Real ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    Real lo = best_theta - step, hi = best_theta + step;
    Real x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
    ComplexVector warm1 = warm, warm2 = warm;
    Real f1 = hermitian_part_max(a, x1, warm1, scale, jitter);
    Real f2 = hermitian_part_max(a, x2, warm2, scale, jitter);
    for (int it = 0; it < 40 && hi - lo > 1e-6; ++it)
    {
        if (f1 < f2)
        {
            lo = x1;
            x1 = x2;
            f1 = f2;
            warm1 = warm2;
            x2 = lo + ratio * (hi - lo);
            f2 = hermitian_part_max(a, x2, warm2, scale, jitter);
        }
        else
        {
            hi = x2;
            x2 = x1;
            f2 = f1;
            warm2 = warm1;
            x1 = hi - ratio * (hi - lo);
            f1 = hermitian_part_max(a, x1, warm1, scale, jitter);
        }
    }
    return std::max({best, f1, f2});
}

Real numerical_radius_estimate(const CoeffMatrix& f, Index theta_count)
{
    return numerical_radius_estimate(f.matrix, theta_count);
}

Real numerical_abscissa(const ComplexBandedMatrix& a)
{
    const Index n = a.size();
    if (n == 0)
        return 0.0;
    const Real scale = numerical_radius_bound(a);
    if (scale == 0.0)
        return 0.0;
    ComplexVector warm = seeded_start(n);
    return hermitian_part_max(a, 0.0, warm, scale, warm);
}

Real numerical_abscissa(const CoeffMatrix& f)
{
    return numerical_abscissa(f.matrix);
}

DecayProfile fit_decay_profile(RealVector diagonal_max, Index band_unit, Real threshold)
{
    DecayProfile out;
    out.band_unit = std::max<Index>(band_unit, 1);
    out.threshold = threshold;
    out.diagonal_max = std::move(diagonal_max);
    const RealVector& dm = out.diagonal_max;
    const Index n = dm.size();
    for (Index j = n - 1; j >= 0; --j)
        if (dm(j) > threshold)
        {
            out.K = j;
            break;
        }

    constexpr Real underflow = 1e-300;
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    Index points = 0;
    for (Index j = 0; j < n; ++j)
    {
        if (!(dm(j) > underflow))
            continue;
        const Real x = Real(j) / Real(out.band_unit);
        const Real y = std::log(dm(j));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++points;
    }
    if (points < 2)
    {
        out.mu = 0.0;
        out.constant = n > 0 ? dm(0) : 0.0;
        return out;
    }
    const Real slope = (Real(points) * sxy - sx * sy) / (Real(points) * sxx - sx * sx);
    out.mu = std::exp(slope);
    Real log_c = -std::numeric_limits<Real>::infinity();
    for (Index j = 0; j < n; ++j)
        if (dm(j) > underflow)
            log_c = std::max(log_c, std::log(dm(j)) - slope * Real(j) / Real(out.band_unit));
    out.constant = std::exp(log_c);
    return out;
}

DecayProfile resolvent_decay_profile(const ComplexBandedMatrix& a, Index band_unit, Real delta_tol)
{
    const Index n = a.size();
    const BandedLU<Complex> lu(identity_minus(a), kMachineEps * kMachineEps);
    RealVector dm = RealVector::Zero(n);
    for (Index j = 0; j < n; ++j)
    {
        const ComplexVector col = lu.solve(unit(n, j));
        for (Index k = 0; k < n; ++k)
            dm(std::abs(k - j)) = std::max(dm(std::abs(k - j)), std::abs(col(k)));
    }
    return fit_decay_profile(std::move(dm), band_unit, delta_tol);
}

DecayProfile resolvent_decay_profile(const CoeffMatrix& f, Real delta_tol)
{
    return resolvent_decay_profile(f.matrix, f.N + 1, delta_tol);
}

DecayProfile sampled_resolvent_profile(const ComplexBandedMatrix& a, Index band_unit, Real delta_tol, Index samples)
{
    const Index n = a.size();
    const BandedLU<Complex> lu(identity_minus(a), kMachineEps * kMachineEps);
    RealVector dm = RealVector::Zero(n);
    samples = std::max<Index>(samples, 1);
    for (Index s = 0; s < samples; ++s)
    {
        const Index j = std::clamp<Index>((n * (s + 1)) / (samples + 1), 0, n - 1);
        const ComplexVector col = lu.solve(unit(n, j));
        for (Index k = 0; k < n; ++k)
            dm(std::abs(k - j)) = std::max(dm(std::abs(k - j)), std::abs(col(k)));
    }
    const Real peak = n > 0 ? dm.maxCoeff() : 0.0;
    return fit_decay_profile(std::move(dm), band_unit, delta_tol * peak);
}

Index trailing_inverse_bandwidth(const ComplexBandedMatrix& a, Index offset, Index block, Real delta_tol)
{
    const Index n = a.size() - offset;
    if (offset < 0 || block < 1 || n < block)
        throw SizeError("trailing_inverse_bandwidth: block does not fit");
    ComplexBandedMatrix d(n, a.lower(), a.upper());
    for (Index j = 0; j < n; ++j)
        for (Index i = d.row_begin(j); i < d.row_end(j); ++i)
            d.coeffRef(i, j) = (i == j ? 1.0 : 0.0) - a(i + offset, j + offset);
    const BandedLU<Complex> lu(d, kMachineEps * kMachineEps);
    Index width = 0;
    for (Index j = 0; j < block; ++j)
    {
        const ComplexVector col = lu.solve(unit(n, j));
        for (Index k = 0; k < block; ++k)
            if (std::abs(col(k)) > delta_tol)
                width = std::max(width, std::abs(k - j));
    }
    return width;
}

Index trailing_column_reach(const ComplexBandedMatrix& a, Index columns, Real delta_tol)
{
    const Index n = a.size();
    columns = std::clamp<Index>(columns, 1, n);
    const BandedLU<Complex> lu(identity_minus(a), kMachineEps * kMachineEps);
    std::vector<ComplexVector> cols;
    Real peak = 0.0;
    for (Index j = n - columns; j < n; ++j)
    {
        cols.push_back(lu.solve(unit(n, j)));
        peak = std::max(peak, cols.back().cwiseAbs().maxCoeff());
    }
    Index reach = 0;
    for (Index c = 0; c < columns; ++c)
    {
        const Index j = n - columns + c;
        for (Index k = 0; k < j; ++k)
            if (std::abs(cols[c](k)) > delta_tol * peak)
            {
                reach = std::max(reach, j - k);
                break;
            }
    }
    return reach;
}

Index predicted_accurate_entries(Index M, Index N, Index K)
{
    return std::max<Index>(0, M - N - K - 2);
}

Real err_f(const ComplexVector& approx, const ScalarFunction& exact, Index M)
{
    const RealVector nodes = equidistant_nodes(std::max<Index>(10 * M, 2));
    Real diff = 0.0, norm = 0.0;
    for (Index i = 0; i < nodes.size(); ++i)
    {
        const Complex u = exact(nodes(i));
        diff = std::max(diff, std::abs(u - eval_series(approx, nodes(i))));
        norm = std::max(norm, std::abs(u));
    }
    if (norm == 0.0)
        throw DomainError("err_f: exact solution vanishes on the grid");
    return diff / norm;
}

RealVector err_c(const ComplexVector& approx, const ComplexVector& exact)
{
    const Index n = std::max(approx.size(), exact.size());
    ComplexVector a = ComplexVector::Zero(n), c = ComplexVector::Zero(n);
    a.head(approx.size()) = approx;
    c.head(exact.size()) = exact;
    const Real norm = n > 0 ? c.cwiseAbs().maxCoeff() : 0.0;
    if (norm == 0.0)
        throw DomainError("err_c: exact coefficients are all zero");
    return (c - a).cwiseAbs() / norm;
}

ConjectureCheck conjecture_check(const LegendreSeries& series)
{
    ConjectureCheck out;
    out.coefficient_sum = series.l1_norm();
    out.satisfied = out.coefficient_sum <= kConjectureThreshold;
    return out;
}

} // namespace legspec
