#include <doctest.h>

#include <numbers>

#include "legspec/legendre.hpp"
#include "support.hpp"

using namespace legspec;
namespace ts = testing_support;

TEST_CASE("eval_legendre: constant and endpoint values")
{
    CHECK(eval_legendre(0, 0.37) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(eval_legendre(1, 1.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
}

TEST_CASE("eval_legendre: degree 4 against the explicit polynomial")
{
    const Real t = 0.3;
    const Real explicit_p4 = (35 * std::pow(t, 4) - 30 * t * t + 3) / 8 * std::sqrt(4.5);
    CHECK(std::abs(eval_legendre(4, t) - explicit_p4) < 1e-15);
}

TEST_CASE("eval_legendre: matches a long double Bonnet recurrence")
{
    auto g = ts::rng(11);
    for (int i = 0; i < 200; ++i)
    {
        const Index k = ts::uniform_index(g, 0, 300);
        const Real t = ts::uniform(g, -1, 1);
        CHECK(std::abs(eval_legendre(k, t) - ts::orthonormal_legendre(k, t)) <=
              1e-13 * std::sqrt(k + 0.5));
    }
}

TEST_CASE("eval_legendre: rejects points outside the interval")
{
    CHECK_THROWS_AS((void)eval_legendre(3, 1.1), DomainError);
    CHECK_THROWS_AS((void)eval_legendre(3, -1.0 - 1e-9), DomainError);
    CHECK_NOTHROW((void)eval_legendre(3, 1.0 + 1e-13));
}

TEST_CASE("phi_vector")
{
    SUBCASE("at -1")
    {
        const RealVector v = phi_vector(3, -1.0);
        REQUIRE(v.size() == 3);
        CHECK(v(0) == doctest::Approx(0.70710678).epsilon(1e-8));
        CHECK(v(1) == doctest::Approx(-1.22474487).epsilon(1e-8));
        CHECK(v(2) == doctest::Approx(1.58113883).epsilon(1e-8));
    }
    SUBCASE("single entry")
    {
        const RealVector v = phi_vector(1, 0.0);
        REQUIRE(v.size() == 1);
        CHECK(v(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    }
    SUBCASE("elementwise against eval_legendre")
    {
        const RealVector v = phi_vector(5, 0.5);
        for (Index k = 0; k < 5; ++k)
            CHECK(v(k) == doctest::Approx(ts::orthonormal_legendre(k, 0.5)).epsilon(1e-14));
    }
    SUBCASE("endpoint closed form holds at high degree")
    {
        const RealVector v = phi_vector(2000, -1.0);
        for (Index k = 0; k < 2000; k += 97)
            CHECK(v(k) == (k % 2 ? -1.0 : 1.0) * std::sqrt((2.0 * k + 1.0) / 2.0));
    }
}

TEST_CASE("property: orthonormality under Gauss-Legendre quadrature")
{
    const auto rule = ts::golub_welsch(40);
    for (Index k = 0; k <= 30; ++k)
        for (Index l = 0; l <= 30; ++l)
        {
            const Real v = ts::integrate(rule, [&](Real t) { return eval_legendre(k, t) * eval_legendre(l, t); });
            CHECK(std::abs(v - (k == l ? 1.0 : 0.0)) < 1e-13);
        }
}

TEST_CASE("property: sup bound on a 1000-point grid")
{
    const RealVector t = equidistant_nodes(1000);
    for (Index d = 0; d <= 200; ++d)
    {
        const Real bound = std::sqrt((2.0 * d + 1.0) / 2.0) * (1 + 1e-14);
        bool ok = true;
        for (Index i = 0; i < t.size(); ++i)
            ok = ok && std::abs(eval_legendre(d, t(i))) <= bound;
        CHECK_MESSAGE(ok, "degree " << d);
    }
}

TEST_CASE("eval_series")
{
    ComplexVector one(1);
    one << std::sqrt(2.0);
    CHECK(std::abs(eval_series(one, 0.123) - 1.0) < 1e-15);

    ComplexVector lin(2);
    lin << 0.0, std::sqrt(2.0 / 3.0);
    for (Real t : {-1.0, -0.4, 0.0, 0.77, 1.0})
        CHECK(std::abs(eval_series(lin, t) - t) < 1e-15);

    auto g = ts::rng(3);
    ComplexVector c(20);
    for (Index d = 0; d < 20; ++d)
        c(d) = ts::uniform_complex(g);
    Complex direct = 0;
    for (Index d = 0; d < 20; ++d)
        direct += c(d) * ts::orthonormal_legendre(d, 0.3);
    CHECK(std::abs(eval_series(c, 0.3) - direct) < 1e-13);

    CHECK_THROWS_AS((void)eval_series(c, -1.5), DomainError);
}

TEST_CASE("chop_series")
{
    ComplexVector a(4);
    a << 1.0, 1e-20, 1e-20, 1e-20;
    CHECK(chop_series(a, 1e-15) == 1);

    ComplexVector geo(61);
    for (Index d = 0; d <= 60; ++d)
        geo(d) = std::pow(2.0, -Real(d));
    Index first = 0;
    while (std::pow(2.0, -Real(first)) > 1e-15)
        ++first;
    CHECK(chop_series(geo, 1e-15) == first);
    CHECK(first == 50);

    const ComplexVector ones = ComplexVector::Ones(30);
    CHECK(chop_series(ones, 1e-15) == 30);
}

TEST_CASE("expand_function: examples")
{
    SUBCASE("constant")
    {
        const LegendreSeries s = expand_function([](Real) { return Complex(1.0); }, 1e-14);
        REQUIRE(s.size() == 1);
        CHECK(std::abs(s.coeffs(0) - std::sqrt(2.0)) < 1e-15);
    }
    SUBCASE("rescaled linear coefficient function")
    {
        const Complex i(0, 1);
        const Real c = 156.25;
        const LegendreSeries s = expand_function([&](Real t) { return -i * c * (t + 1); }, kMachineEps);
        REQUIRE(s.size() == 2);
        // Reference: project onto p_0 and p_1 by an independent quadrature.
        const auto rule = ts::golub_welsch(4);
        for (Index d = 0; d < 2; ++d)
        {
            const Complex ref = ts::integrate(rule, [&](Real t) { return -i * c * (t + 1) * ts::orthonormal_legendre(d, t); });
            CHECK(std::abs(s.coeffs(d) - ref) < 1e-12);
        }
        CHECK(std::abs(s.coeffs(0) + i * std::sqrt(2.0) * c) < 1e-12);
        CHECK(std::abs(s.coeffs(1) + i * std::sqrt(2.0 / 3.0) * c) < 1e-12);
        CHECK(std::abs(s.l1_norm() - 348.5) < 0.1);
    }
}

TEST_CASE("property: expansion reproduces the function")
{
    const Complex i(0, 1);
    const Real tol = 1e-14;
    std::vector<ScalarFunction> fs = {
        [](Real t) { return Complex(std::exp(t)); },
        [&](Real t) { return std::sin(1.0 * (t + 1)) * i; },
        [](Real t) { return Complex(std::sin(3.0 * (t + 1)), std::cos(2.0 * t)); },
        [](Real t) { return Complex(std::sin(5.0 * (t + 1))); },
    };
    auto g = ts::rng(5);
    for (int p = 0; p < 3; ++p)
    {
        std::vector<Complex> c(6);
        for (auto& x : c)
            x = ts::uniform_complex(g);
        fs.push_back([c](Real t) {
            Complex acc = 0;
            for (auto it = c.rbegin(); it != c.rend(); ++it)
                acc = acc * t + *it;
            return acc;
        });
    }
    const RealVector grid = equidistant_nodes(200);
    for (std::size_t j = 0; j < fs.size(); ++j)
    {
        const LegendreSeries s = expand_function(fs[j], tol);
        Real fmax = 0, err = 0;
        for (Index k = 0; k < grid.size(); ++k)
        {
            fmax = std::max(fmax, std::abs(fs[j](grid(k))));
            err = std::max(err, std::abs(eval_series(s, grid(k)) - fs[j](grid(k))));
        }
        CHECK_MESSAGE(err <= 10 * tol * fmax, "function " << j << " err " << err);
    }
}

TEST_CASE("property: expansion is linear")
{
    auto f = [](Real t) { return Complex(std::cos(2 * t), std::sin(t)); };
    auto h = [](Real t) { return Complex(std::exp(-t), 0.5 * t * t); };
    const Complex a(0.7, -0.2), b(-1.3, 0.4);
    const LegendreSeries sf = expand_function(f, kMachineEps);
    const LegendreSeries sh = expand_function(h, kMachineEps);
    const LegendreSeries sc = expand_function([&](Real t) { return a * f(t) + b * h(t); }, kMachineEps);
    const Index n = std::max({sf.size(), sh.size(), sc.size()});
    for (Index d = 0; d < n; ++d)
    {
        const Complex lhs = d < sc.size() ? sc.coeffs(d) : Complex(0);
        const Complex rhs = a * (d < sf.size() ? sf.coeffs(d) : Complex(0)) +
                            b * (d < sh.size() ? sh.coeffs(d) : Complex(0));
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("property: fitted tail stays under the tolerance")
{
    for (Real omega : {1.0, 2.0, 5.0, 12.0})
    {
        const LegendreSeries s =
            expand_function([&](Real t) { return Complex(0, -std::sin(omega * (t + 1))); }, 1e-12);
        const Real scale = s.coeffs.cwiseAbs().maxCoeff();
        REQUIRE(s.decay.has_value());
        CHECK(s.decay->tail_sum(s.size(), TailWeight::LegendreSup) <= 1e-12 * scale);
    }
}

TEST_CASE("expand_function: non-smooth input hits the node cap")
{
    ExpandOptions small;
    small.max_nodes = 512;
    CHECK_THROWS_AS((void)expand_function([](Real t) { return Complex(std::abs(t)); }, 1e-14, small),
                    ConvergenceError);
}
