#include "legspec/legendre.hpp"

#include <algorithm>
#include <cmath>

#include "legspec/quadrature.hpp"

namespace legspec
{

namespace
{

constexpr Real kDomainSlack = 1e-12;

// Relative noise level up to which a transform still counts as resolved:
// evaluating f itself can lose a few digits (large arguments of sin, exp).
constexpr Real kResolvedNoise = 1e3 * kMachineEps;

constexpr Index kFitWindow = 10;

// Plateau test: the envelope drops by less than kFlatRatio over kFlatWindow entries.
constexpr Index kFlatWindow = 8;
constexpr Real kFlatRatio = 4.0;

// First index where the running envelope is both below `cap` (relative) and
// flat. Rounding noise is not white: right past the signal band it can sit
// well above the level seen in the last quarter of the transform.
Index plateau_start(const ComplexVector& raw, Real scale, Real cap)
{
    const Index n = raw.size();
    std::vector<Real> env(n);
    Real running = 0.0;
    for (Index d = n - 1; d >= 0; --d)
    {
        running = std::max(running, std::abs(raw(d)) / scale);
        env[d] = running;
    }
    for (Index j = 0; j < n; ++j)
        if (env[j] <= cap && env[j] <= kFlatRatio * env[std::min(j + kFlatWindow, n - 1)])
            return j;
    return n;
}

void check_domain(Real t, const char* who)
{
    if (!(std::abs(t) <= 1.0 + kDomainSlack))
        throw DomainError(std::string(who) + ": t outside [-1, 1]");
}

// Orthonormal recurrence p_{k+1} = A_k t p_k - B_k p_{k-1}.
Real rec_a(Index k)
{
    return std::sqrt(Real(2 * k + 1) * Real(2 * k + 3)) / Real(k + 1);
}

Real rec_b(Index k)
{
    return Real(k) / Real(k + 1) * std::sqrt(Real(2 * k + 3) / Real(2 * k - 1));
}

} // namespace

Real tail_weight(TailWeight w, Index d)
{
    switch (w)
    {
    case TailWeight::Unit:
        return 1.0;
    case TailWeight::LegendreSup:
        return std::sqrt((2.0 * d + 1.0) / 2.0);
    case TailWeight::NormBound:
        return 3.0 * d + 2.0;
    }
    return 1.0;
}

Real DecayFit::bound(Index d) const
{
    if (std::isinf(rho))
        return 0.0;
    return constant * std::pow(rho, -Real(d + 1));
}

Real DecayFit::tail_sum(Index from, TailWeight weight) const
{
    if (constant == 0.0 || std::isinf(rho))
        return 0.0;
    if (!(rho > 1.0))
        return std::numeric_limits<Real>::infinity();
    Real sum = 0.0;
    Real term_scale = constant * std::pow(rho, -Real(from + 1));
    for (Index d = from; d < from + 100000; ++d)
    {
        const Real term = term_scale * tail_weight(weight, d);
        sum += term;
        if (term <= 1e-18 * sum || term_scale == 0.0)
            break;
        term_scale /= rho;
    }
    return sum;
}

DecayFit fit_geometric_decay(const ComplexVector& coeffs, Index count)
{
    DecayFit fit;
    const Index n = std::min<Index>(coeffs.size(), count + 1);
    if (n == 0)
        return fit;
    const Real scale = coeffs.head(n).cwiseAbs().maxCoeff();
    if (scale == 0.0)
    {
        fit.constant = 0.0;
        return fit;
    }
    // Right-to-left running maximum, floored so exact zeros stay finite in log space.
    const Real floor = scale * kMachineEps * kMachineEps;
    std::vector<Real> env(n);
    Real running = 0.0;
    for (Index d = n - 1; d >= 0; --d)
    {
        running = std::max(running, std::abs(coeffs(d)));
        env[d] = std::max(running, floor);
    }
    // Local window: coefficients of entire functions decay faster than any
    // geometric rate, so only the last few points say anything about the tail.
    const Index first = std::max<Index>(n / 2, n - kFitWindow);
    const Index points = n - first;
    if (points < 2)
    {
        // A single coefficient: nothing to extrapolate from.
        fit.constant = env[n - 1];
        return fit;
    }
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (Index d = first; d < n; ++d)
    {
        const Real x = Real(d + 1);
        const Real y = std::log(env[d]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const Real slope = (points * sxy - sx * sy) / (points * sxx - sx * sx);
    if (!(slope < 0.0))
    {
        fit.rho = 1.0;
        fit.constant = env[first];
        return fit;
    }
    fit.rho = std::exp(-slope);
    fit.constant = std::exp((sy - slope * sx) / Real(points));
    if (!std::isfinite(fit.constant))
    {
        // Decay so steep that rho^(d+1) overflows: the tail is numerically zero.
        fit.constant = 0.0;
        fit.rho = std::numeric_limits<Real>::infinity();
    }
    return fit;
}

Real LegendreSeries::tail(Index n, TailWeight weight) const
{
    Real sum = 0.0;
    for (Index d = std::max<Index>(n + 1, 0); d < coeffs.size(); ++d)
        sum += std::abs(coeffs(d)) * tail_weight(weight, d);
    if (decay)
        sum += decay->tail_sum(std::max<Index>(n + 1, coeffs.size()), weight);
    return sum;
}

LegendreSeries LegendreSeries::truncated(Index n) const
{
    LegendreSeries out = *this;
    const Index keep = std::clamp<Index>(n + 1, 1, coeffs.size());
    out.coeffs = coeffs.head(keep);
    if (keep < coeffs.size())
    {
        // Dropped stored entries are folded into the envelope only through the
        // existing fit; tail() on the result is therefore an estimate.
        if (!out.decay)
            out.decay = fit_geometric_decay(coeffs, coeffs.size() - 1);
    }
    return out;
}

Real eval_legendre(Index k, Real t)
{
    if (k < 0)
        throw DomainError("eval_legendre: negative degree");
    check_domain(t, "eval_legendre");
    Real p0 = 1.0;
    Real p1 = t;
    if (k == 0)
        return std::sqrt(0.5);
    if (std::abs(t) == 1.0)
        return (t < 0.0 && k % 2 == 1 ? -1.0 : 1.0) * std::sqrt((2.0 * k + 1.0) / 2.0);
    for (Index j = 1; j < k; ++j)
    {
        const Real p2 = (Real(2 * j + 1) * t * p1 - Real(j) * p0) / Real(j + 1);
        p0 = p1;
        p1 = p2;
    }
    return p1 * std::sqrt((2.0 * k + 1.0) / 2.0);
}

RealVector phi_vector(Index size, Real t)
{
    if (size < 1)
        throw SizeError("phi_vector: size must be >= 1");
    check_domain(t, "phi_vector");
    RealVector out(size);
    if (std::abs(t) == 1.0)
    {
        // Closed form at the endpoints; the recurrence drifts by ~k eps there.
        for (Index k = 0; k < size; ++k)
            out(k) = (t < 0.0 && k % 2 == 1 ? -1.0 : 1.0) * std::sqrt((2.0 * k + 1.0) / 2.0);
        return out;
    }
    out(0) = std::sqrt(0.5);
    if (size > 1)
        out(1) = rec_a(0) * t * out(0);
    for (Index k = 1; k + 1 < size; ++k)
        out(k + 1) = rec_a(k) * t * out(k) - rec_b(k) * out(k - 1);
    return out;
}

Complex eval_series(const ComplexVector& coeffs, Real t)
{
    check_domain(t, "eval_series");
    const Index n = coeffs.size();
    Complex b1(0), b2(0);
    for (Index k = n - 1; k >= 0; --k)
    {
        const Complex b0 = coeffs(k) + rec_a(k) * t * b1 - (k + 1 < n ? rec_b(k + 1) * b2 : Complex(0));
        b2 = b1;
        b1 = b0;
    }
    return b1 * std::sqrt(0.5);
}

Complex eval_series(const LegendreSeries& series, Real t)
{
    return eval_series(series.coeffs, t);
}

RealVector equidistant_nodes(Index count)
{
    if (count < 2)
        throw SizeError("equidistant_nodes: need at least two nodes");
    RealVector nodes(count);
    for (Index i = 0; i < count; ++i)
        nodes(i) = -1.0 + 2.0 * Real(i) / Real(count - 1);
    nodes(count - 1) = 1.0;
    return nodes;
}

EvalGrid sample_series(const ComplexVector& coeffs, Index count)
{
    EvalGrid grid;
    grid.nodes = equidistant_nodes(count);
    grid.values.resize(count);
    for (Index i = 0; i < count; ++i)
        grid.values(i) = eval_series(coeffs, grid.nodes(i));
    return grid;
}

Index chop_series(const ComplexVector& coeffs, Real tol)
{
    const Index n = coeffs.size();
    if (n == 0)
        return 0;
    const Real scale = coeffs.cwiseAbs().maxCoeff();
    if (scale == 0.0)
        return 0;
    const Real limit = tol * scale;
    Index k = n;
    while (k > 0 && std::abs(coeffs(k - 1)) <= limit)
        --k;
    // k is now one past the last entry above the limit.
    return k;
}

ComplexVector discrete_legendre_transform(const ScalarFunction& f, Index n)
{
    const GaussLegendreRule rule = gauss_legendre(n);
    std::vector<long double> acc_re(n, 0.0L), acc_im(n, 0.0L);
    std::vector<long double> a(n), b(n);
    for (Index k = 0; k < n; ++k)
    {
        a[k] = std::sqrt((2.0L * k + 1.0L) * (2.0L * k + 3.0L)) / (k + 1.0L);
        b[k] = k == 0 ? 0.0L : (long double)k / (k + 1.0L) * std::sqrt((2.0L * k + 3.0L) / (2.0L * k - 1.0L));
    }
    const long double p0 = std::sqrt(0.5L);
    for (Index i = 0; i < n; ++i)
    {
        const long double x = rule.nodes[i];
        const Complex v = f(static_cast<Real>(x));
        const long double wr = rule.weights[i] * v.real();
        const long double wi = rule.weights[i] * v.imag();
        long double pm1 = 0.0L;
        long double p = p0;
        for (Index k = 0; k < n; ++k)
        {
            acc_re[k] += wr * p;
            acc_im[k] += wi * p;
            const long double next = a[k] * x * p - b[k] * pm1;
            pm1 = p;
            p = next;
        }
    }
    ComplexVector out(n);
    for (Index k = 0; k < n; ++k)
        out(k) = Complex(static_cast<Real>(acc_re[k]), static_cast<Real>(acc_im[k]));
    return out;
}

LegendreSeries expand_function(const ScalarFunction& f, Real tol, const ExpandOptions& options)
{
    if (!(tol > 0.0 && tol < 1.0))
        throw DomainError("expand_function: tolerance must lie in (0, 1)");
    tol = std::max(tol, kMachineEps);

    Index n = std::max<Index>(options.initial_nodes, 8);
    while (true)
    {
        const ComplexVector raw = discrete_legendre_transform(f, n);
        const Real scale = raw.cwiseAbs().maxCoeff();
        LegendreSeries series;
        if (scale == 0.0)
        {
            series.coeffs = ComplexVector::Zero(1);
            return series;
        }
        // Last quarter of the transform: pure rounding noise once f is resolved.
        // (The upper half can still carry signal of size ~1e-14.)
        const Real noise = raw.tail(n / 4).cwiseAbs().maxCoeff() / scale;
        if (noise <= std::max(tol, kResolvedNoise))
        {
            const Real level = std::max(tol, noise);
            const Index resolved = std::max<Index>(
                std::min(chop_series(raw, noise), plateau_start(raw, scale, std::max(tol, kResolvedNoise))), 1);
            Index kept = std::max<Index>(std::min(chop_series(raw, level), resolved), 1);
            DecayFit fit = fit_geometric_decay(raw, kept);
            const Real limit = tol * scale;
            // A loose tolerance can cut where the extrapolated tail is still too
            // heavy; move out while the transform is above noise.
            while (kept < resolved && fit.tail_sum(kept, TailWeight::LegendreSup) > limit)
                fit = fit_geometric_decay(raw, ++kept);
            Index degree = kept - 1;
            Real tail = fit.tail_sum(kept, TailWeight::LegendreSup);
            // Walk the cut point down while the truncated tail stays inside the limit.
            while (degree > 0)
            {
                const Real next = tail + std::abs(raw(degree)) * tail_weight(TailWeight::LegendreSup, degree);
                if (next > limit)
                    break;
                tail = next;
                --degree;
            }
            series.coeffs = raw.head(degree + 1);
            series.decay = fit;
            return series;
        }
        if (2 * n > options.max_nodes)
            throw ConvergenceError("expand_function: coefficients not resolved within " +
                                   std::to_string(options.max_nodes) +
                                   " nodes (input is not smooth enough or tolerance too tight)");
        n *= 2;
    }
}

} // namespace legspec
