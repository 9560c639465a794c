#include <doctest.h>

#include "legspec/analysis.hpp"
#include "legspec/basis_matrix.hpp"
#include "legspec/problems.hpp"
#include "support.hpp"

using namespace legspec;
namespace ts = testing_support;

namespace
{

const Complex I(0, 1);

Real dense_top(const ComplexMatrix& a, Real theta)
{
    const Complex ph = std::polar(1.0, -theta);
    const ComplexMatrix h = 0.5 * (ph * a + std::conj(ph) * a.adjoint());
    return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
}

// Fine angle grid of dense eigenvalue problems, then ternary search around the best angle.
Real dense_numerical_radius(const ComplexMatrix& a, int angles = 720)
{
    const Real step = 2 * std::numbers::pi / angles;
    Real best = -1, best_theta = 0;
    for (int i = 0; i < angles; ++i)
    {
        const Real v = dense_top(a, step * i);
        if (v > best)
        {
            best = v;
            best_theta = step * i;
        }
    }
    Real lo = best_theta - step, hi = best_theta + step;
    for (int it = 0; it < 60; ++it)
    {
        const Real m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (dense_top(a, m1) < dense_top(a, m2))
            lo = m1;
        else
            hi = m2;
    }
    return std::max(best, dense_top(a, 0.5 * (lo + hi)));
}

ComplexBandedMatrix to_banded(const ComplexMatrix& d, Index bw)
{
    ComplexBandedMatrix out(d.rows(), bw, bw);
    for (Index j = 0; j < d.cols(); ++j)
        for (Index i = out.row_begin(j); i < out.row_end(j); ++i)
            out.coeffRef(i, j) = d(i, j);
    return out;
}

CoeffMatrix coefficient_matrix(const OdeProblem& p, Index m)
{
    const OdeProblem r = rescale_to_reference(p);
    return assemble(prepare_series(r.f, {}), m);
}

} // namespace

TEST_CASE("numerical_radius_bound")
{
    CHECK(numerical_radius_bound(ComplexBandedMatrix(10, 2, 2)) == 0.0);
    ComplexBandedMatrix d(6, 0, 0);
    for (Index i = 0; i < 6; ++i)
        d.coeffRef(i, i) = 3.0;
    CHECK(numerical_radius_bound(d) == doctest::Approx(3.0));

    for (Index deg : {0, 10, 100})
    {
        const ComplexBandedMatrix b = basis_matrix_dense(deg, 2000).cast<Complex>();
        const Real bound = numerical_radius_bound(b);
        CHECK(bound >= numerical_abscissa(b));
        CHECK(bound <= basis_matrix_inf_norm_bound(deg));
    }
}

TEST_CASE("numerical_radius_estimate: Hermitian matrix gives the spectral radius")
{
    auto g = ts::rng(61);
    for (Index m : {12, 200})
    {
        ComplexMatrix h = ComplexMatrix::Zero(m, m);
        for (Index i = 0; i < m; ++i)
            for (Index j = std::max<Index>(0, i - 3); j <= i; ++j)
            {
                h(i, j) = i == j ? Complex(ts::uniform(g, -1, 1)) : ts::uniform_complex(g);
                h(j, i) = std::conj(h(i, j));
            }
        h(0, 0) = -5.0; // dominant eigenvalue is negative
        const Real rho = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h).eigenvalues().cwiseAbs().maxCoeff();
        CHECK(numerical_radius_estimate(to_banded(h, 3)) == doctest::Approx(rho).epsilon(1e-10));
    }
}

TEST_CASE("numerical_radius_estimate: agrees with a dense angle scan")
{
    for (const OdeProblem& p : {toy_problem(5, 10), toy_problem(5, 1)})
    {
        const CoeffMatrix f = coefficient_matrix(p, 100);
        const Real est = numerical_radius_estimate(f);
        CHECK(est == doctest::Approx(dense_numerical_radius(f.matrix.to_dense())).epsilon(1e-8));
        CHECK(est >= numerical_abscissa(f));
    }
    auto g = ts::rng(67);
    // Large enough to take the iterative path.
    ComplexMatrix a = ComplexMatrix::Zero(200, 200);
    for (Index i = 0; i < 200; ++i)
        for (Index j = std::max<Index>(0, i - 4); j <= std::min<Index>(199, i + 4); ++j)
            a(i, j) = ts::uniform_complex(g);
    CHECK(numerical_radius_estimate(to_banded(a, 4)) == doctest::Approx(dense_numerical_radius(a, 360)).epsilon(1e-9));
    CHECK_THROWS_AS((void)numerical_radius_estimate(to_banded(a, 4), 4), DomainError);
}

TEST_CASE("numerical abscissa of the experiment matrices")
{
    // The source's reported radii coincide with max Re W(F).
    CHECK(numerical_abscissa(coefficient_matrix(toy_problem(5, 10), 100)) == doctest::Approx(0.2151).epsilon(5e-4));
    CHECK(numerical_abscissa(coefficient_matrix(toy_problem(5, 1), 100)) == doctest::Approx(2.151).epsilon(5e-4));
    CHECK(numerical_abscissa(coefficient_matrix(polynomial_problem(25), 1000)) == doctest::Approx(147.6).epsilon(5e-4));
}

TEST_CASE("property: estimate never exceeds the bound")
{
    auto g = ts::rng(71);
    for (int trial = 0; trial < 20; ++trial)
    {
        const Index m = ts::uniform_index(g, 2, 250), bw = ts::uniform_index(g, 0, std::min<Index>(m - 1, 6));
        ComplexBandedMatrix a(m, bw, bw);
        for (Index j = 0; j < m; ++j)
            for (Index i = a.row_begin(j); i < a.row_end(j); ++i)
                a.coeffRef(i, j) = ts::uniform_complex(g);
        CHECK(numerical_radius_estimate(a, 16) <= numerical_radius_bound(a) + 1e-10);
    }
}

TEST_CASE("property: basis matrices stay inside the observed disk")
{
    std::vector<Index> degrees;
    for (Index d = 0; d <= 10; ++d)
        degrees.push_back(d);
    for (Index d = 15; d <= 100; d += 5)
        degrees.push_back(d);
    for (Index d : degrees)
    {
        const ComplexBandedMatrix b = basis_matrix_dense(d, 500).cast<Complex>();
        const Real est = numerical_radius_estimate(b);
        CHECK_MESSAGE(est <= 0.87 + 0.02, "d=" << d << " estimate " << est);
        CHECK(est <= numerical_radius_bound(b) + 1e-10);
    }
}

TEST_CASE("resolvent_decay_profile")
{
    SUBCASE("zero matrix")
    {
        const DecayProfile p = resolvent_decay_profile(ComplexBandedMatrix(8, 1, 1), 1);
        CHECK(p.diagonal_max(0) == 1.0);
        CHECK(p.diagonal_max.tail(7).isZero(0.0));
        CHECK(p.K == 0);
    }
    SUBCASE("matches a dense inverse")
    {
        const CoeffMatrix f = assemble(expand_function([](Real t) { return -I * std::sin(t + 1); }, kMachineEps)
                                           .truncated(14),
                                       50);
        const DecayProfile p = resolvent_decay_profile(f);
        const ComplexMatrix inv = (ComplexMatrix::Identity(50, 50) - f.matrix.to_dense()).fullPivLu().inverse();
        RealVector dm = RealVector::Zero(50);
        for (Index k = 0; k < 50; ++k)
            for (Index l = 0; l < 50; ++l)
                dm(std::abs(k - l)) = std::max(dm(std::abs(k - l)), std::abs(inv(k, l)));
        CHECK((p.diagonal_max - dm).cwiseAbs().maxCoeff() <= 1e-14);
        Index k_dense = 0;
        for (Index j = 0; j < 50; ++j)
            if (dm(j) > kMachineEps)
                k_dense = j;
        CHECK(p.K == k_dense);
        CHECK(p.band_unit == 15);
        CHECK(p.mu < 1.0);
    }
    SUBCASE("monotone tail for the linear coefficient")
    {
        for (Real tend : {25.0, 50.0})
        {
            const DecayProfile p = resolvent_decay_profile(coefficient_matrix(polynomial_problem(tend), 1000));
            CHECK(p.mu < 1.0);
            // Past the peak the envelope only goes down (up to rounding).
            Index peak = 0;
            p.diagonal_max.maxCoeff(&peak);
            Real running = p.diagonal_max(peak);
            Index violations = 0;
            for (Index j = peak + 1; j < p.diagonal_max.size(); ++j)
            {
                if (p.diagonal_max(j) > 1.5 * running && p.diagonal_max(j) > 1e-13)
                    ++violations;
                running = std::min(running, p.diagonal_max(j));
            }
            CHECK(violations == 0);
            CHECK(p.diagonal_max(p.diagonal_max.size() - 1) < 1e-10 * p.diagonal_max(peak));
        }
    }
}

TEST_CASE("property: decay bound for a matrix with small numerical radius")
{
    const ComplexBandedMatrix b = basis_matrix_dense(3, 64).cast<Complex>();
    ComplexBandedMatrix a = b;
    a *= Complex(0.5 / numerical_radius_estimate(b));
    REQUIRE(numerical_radius_estimate(a) == doctest::Approx(0.5).epsilon(1e-9));
    const DecayProfile p = resolvent_decay_profile(a, 4);
    CHECK(p.mu < 1.0);
    const ComplexMatrix inv = (ComplexMatrix::Identity(64, 64) - a.to_dense()).inverse();
    for (Index k = 0; k < 64; ++k)
        for (Index l = 0; l < 64; ++l)
        {
            const Real bound = p.constant * std::pow(p.mu, Real(std::abs(k - l)) / 4.0);
            CHECK(std::abs(inv(k, l)) <= bound * (1 + 1e-12) + 1e-300);
        }
}

TEST_CASE("trailing_column_reach")
{
    CHECK(trailing_column_reach(ComplexBandedMatrix(20, 2, 2), 3) == 0);
    // Lower bidiagonal I - A: the inverse is lower triangular, nothing above the diagonal.
    ComplexBandedMatrix lower(30, 1, 0);
    for (Index i = 1; i < 30; ++i)
        lower.coeffRef(i, i - 1) = 0.5;
    CHECK(trailing_column_reach(lower, 4) == 0);
    // Upper bidiagonal with factor 1/2: column j reaches up while 2^-(j-k) > eps = 2^-52.
    ComplexBandedMatrix upper(100, 0, 1);
    for (Index i = 0; i + 1 < 100; ++i)
        upper.coeffRef(i, i + 1) = 0.5;
    CHECK(trailing_column_reach(upper, 1) == 51);
    CHECK(trailing_column_reach(upper, 1, 1e-3) == 9);
}

TEST_CASE("predicted_accurate_entries")
{
    CHECK(predicted_accurate_entries(50, 14, 22) == 12);
    CHECK(predicted_accurate_entries(14 + 22 + 2, 14, 22) == 0);
    CHECK(predicted_accurate_entries(30, 14, 22) == 0);
    CHECK(predicted_accurate_entries(100, 0, 0) == 98);
}

TEST_CASE("property: predicted count is a lower bound on accurate entries")
{
    for (const OdeProblem& p : {toy_problem(5, 10), toy_problem(5, 1), toy_problem(1, 1), polynomial_problem(25)})
    {
        const Index m = auto_size(p);
        const SolveReport a = solve_ode(p, m);
        const SolveReport b = solve_ode(p, 4 * m);
        const Index count = predicted_accurate_entries(m, a.N, *a.K_est);
        REQUIRE(count > 0);
        const Real scale = std::max<Real>(1, b.x_hat.head(m).cwiseAbs().maxCoeff());
        const Real diff = (a.x_hat.head(count) - b.x_hat.head(count)).cwiseAbs().maxCoeff();
        CHECK_MESSAGE(diff <= 1e-12 * scale, p.name << " count " << count << " diff " << diff);
    }
}

TEST_CASE("err_f")
{
    SUBCASE("self comparison")
    {
        auto u = [](Real t) { return std::exp(Complex(0.3 * t, std::sin(2 * t))); };
        const LegendreSeries s = expand_function(u, kMachineEps);
        CHECK(err_f(s.coeffs, u, 100) <= 1e-13);
    }
    SUBCASE("toy problem, omega 5, beta 1")
    {
        const SolveReport r = solve_ode(toy_problem(5, 1), 100);
        CHECK(*r.err_f <= 1e-14);
        CHECK(*r.err_f >= 1e-17);
    }
    SUBCASE("truncated series against a finer grid")
    {
        auto u = [](Real t) { return Complex(std::cos(3 * t), std::exp(t)); };
        const LegendreSeries s = expand_function(u, kMachineEps).truncated(9);
        const Index m = 50;
        Real num = 0, den = 0;
        for (Index i = 0; i < 100 * m; ++i)
        {
            const Real t = -1.0 + 2.0 * i / (100 * m - 1);
            Complex approx = 0;
            for (Index d = 0; d < s.size(); ++d)
                approx += s.coeffs(d) * ts::orthonormal_legendre(d, t);
            num = std::max(num, std::abs(approx - u(t)));
            den = std::max(den, std::abs(u(t)));
        }
        const Real e = err_f(s.coeffs, u, m);
        CHECK(e <= num / den * (1 + 1e-9));
        CHECK(e >= 0.99 * num / den);
    }
}

TEST_CASE("err_c")
{
    ComplexVector c(4);
    c << 1.0, Complex(0, -2), 0.5, 0.0;
    CHECK(err_c(c, c).isZero(0.0));

    ComplexVector shorter(2);
    shorter << 1.0, Complex(0, -2);
    const RealVector e = err_c(shorter, c);
    REQUIRE(e.size() == 4);
    CHECK(e(2) == doctest::Approx(0.25));
    CHECK(e(3) == 0.0);

    CHECK_THROWS_AS((void)err_c(c, ComplexVector::Zero(4)), DomainError);

    const OdeProblem p = polynomial_problem(25);
    const SolveReport r = solve_ode(p, 1000);
    const LegendreSeries exact = expand_function(*rescale_to_reference(p).exact, kMachineEps);
    const Real worst = err_c(r.coeffs.coeffs, exact.coeffs).maxCoeff();
    CHECK(worst == doctest::Approx(*r.max_err_c).epsilon(1e-12));
    CHECK(worst <= 5.228e-13);
    CHECK(worst >= 5.228e-15);
}

TEST_CASE("conjecture_check")
{
    const ConjectureCheck a = conjecture_check(coefficient_matrix(toy_problem(5, 10), 100).series);
    CHECK(a.coefficient_sum == doctest::Approx(1.0909).epsilon(1e-4));
    CHECK(a.satisfied);
    const ConjectureCheck b = conjecture_check(coefficient_matrix(toy_problem(5, 1), 100).series);
    CHECK(b.coefficient_sum == doctest::Approx(10.909).epsilon(1e-4));
    CHECK_FALSE(b.satisfied);
    LegendreSeries zero;
    zero.coeffs = ComplexVector::Zero(3);
    const ConjectureCheck c = conjecture_check(zero);
    CHECK(c.coefficient_sum == 0.0);
    CHECK(c.satisfied);
}
