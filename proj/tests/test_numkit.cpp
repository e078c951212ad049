#include "doctest.h"
#include "oracles.hpp"

#include <numbers>

#include "spfkit/best.hpp"
#include "spfkit/error.hpp"
#include "spfkit/linalg.hpp"
#include "spfkit/power_series.hpp"
#include "spfkit/roots.hpp"
#include "spfkit/sup_norm.hpp"

using namespace spfkit;
using oracle::C;

TEST_CASE("polynomial evaluation, degree and normalization")
{
    ComplexPolynomial p{1.0, 2.0, 3.0, 0.0};
    CHECK(p.degree() == 2);
    CHECK(std::abs(p(2.0) - C(17.0)) < 1e-14);
    CHECK(ComplexPolynomial{}.degree() == ComplexPolynomial::minus_infinity);
    CHECK(ComplexPolynomial{0.0, 0.0}.is_zero());
    ComplexPolynomial q = ComplexPolynomial::from_roots(CVector{1.0, -1.0});
    CHECK(std::abs(q(3.0) - C(8.0)) < 1e-14);
    auto [quot, rem] = divide(ComplexPolynomial{-1.0, 0.0, 1.0}, ComplexPolynomial{-1.0, 1.0});
    CHECK(std::abs(quot(5.0) - C(6.0)) < 1e-14);
    CHECK(rem.is_zero());
}

TEST_CASE("find_roots on closed-form cases")
{
    RootSet a = find_roots(ComplexPolynomial{1.0, 0.0, 1.0});
    CHECK(a.converged);
    CHECK(oracle::multiset_distance(a.roots, {C(0, 1), C(0, -1)}) < 1e-12);

    RootSet b = find_roots(ComplexPolynomial{1.0, 1.0, 1.0});
    const double h = std::sqrt(3.0) / 2.0;
    CHECK(oracle::multiset_distance(b.roots, {C(-0.5, h), C(-0.5, -h)}) < 1e-12);

    RootSet c = find_roots(ComplexPolynomial::from_roots(CVector{1.0, 1.0, 1.0}));
    CHECK(c.roots.size() == 3);
    for (C r : c.roots)
        CHECK(std::abs(r - C(1.0)) < 1e-3);
    // A triple root is only resolved to about tol^{1/3}; group with a matching radius.
    auto grouped = cluster_roots(c.roots, 1e-3);
    REQUIRE(grouped.size() == 1);
    CHECK(grouped[0].multiplicity == 3);
    CHECK(std::abs(grouped[0].center - C(1.0)) < 1e-5);

    RootSet distinct = find_roots(ComplexPolynomial::from_roots(CVector{1.0, 2.0, 3.0}));
    CHECK(distinct.clusters.size() == 3);

    RootSet d = find_roots(ComplexPolynomial{0.0, 0.0, 2.0, 1.0});
    CHECK(oracle::multiset_distance(d.roots, {C(0.0), C(0.0), C(-2.0)}) < 1e-12);
}

TEST_CASE("find_roots residual bound on random polynomials")
{
    std::mt19937_64 rng(7);
    RootOptions opts;
    std::size_t failures = 0;
    for (int t = 0; t < 1000; ++t)
    {
        std::size_t deg = 1 + static_cast<std::size_t>(t % 30);
        CVector c(deg + 1);
        for (auto& x : c)
            x = oracle::random_in_disk(rng, 1.0);
        c.back() = 1.0 + oracle::random_in_disk(rng, 0.5);
        ComplexPolynomial p(c);
        RootSet rs = find_roots(p, opts);
        if (!rs.converged || rs.roots.size() != deg)
        {
            ++failures;
            continue;
        }
        ComplexPolynomial m = p.monic();
        for (C r : rs.roots)
            if (std::abs(m(r)) > opts.tol * m.max_abs_coeff() * std::pow(1.0 + std::abs(r), deg))
                ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("poly_from_power_sums reference values")
{
    ComplexPolynomial z3 = poly_from_power_sums(CVector{0.0, 0.0, 0.0});
    CHECK(z3.degree() == 3);
    CHECK(std::abs(z3[3] - C(1.0)) < 1e-15);
    CHECK(z3.max_abs_coeff() == doctest::Approx(1.0));

    ComplexPolynomial a = poly_from_power_sums(CVector{-1.0, -1.0});
    CHECK(std::abs(a[0] - C(1.0)) < 1e-14);
    CHECK(std::abs(a[1] - C(1.0)) < 1e-14);
    CHECK(std::abs(a[2] - C(1.0)) < 1e-14);

    ComplexPolynomial b = poly_from_power_sums(CVector{1.0, 2.0});
    CHECK(std::abs(b[0] - C(-0.5)) < 1e-14);
    CHECK(std::abs(b[1] - C(-1.0)) < 1e-14);
}

TEST_CASE("power_sums reference values")
{
    CVector s = power_sums(CVector{1.0, 1.0}, 3);
    for (C v : s)
        CHECK(std::abs(v - C(2.0)) < 1e-15);
    CVector t = power_sums(CVector{2.0, -1.0}, 2);
    CHECK(std::abs(t[0] - C(1.0)) < 1e-15);
    CHECK(std::abs(t[1] - C(5.0)) < 1e-15);
    CVector u = power_sums(find_roots(ComplexPolynomial{1.0, 1.0, 1.0}).roots, 2);
    CHECK(std::abs(u[0] - C(-1.0)) < 1e-12);
    CHECK(std::abs(u[1] - C(-1.0)) < 1e-12);
}

TEST_CASE("Newton identities agree with the textbook recursion and round-trip")
{
    std::mt19937_64 rng(11);
    double worst_coeff = 0.0, worst_trip = 0.0;
    for (int t = 0; t < 200; ++t)
    {
        std::size_t n = 1 + static_cast<std::size_t>(t % 20);
        CVector s(n);
        for (std::size_t m = 0; m < n; ++m)
            s[m] = oracle::random_in_disk(rng, std::ldexp(1.0, static_cast<int>(m + 1)));
        ComplexPolynomial p = poly_from_power_sums(s);
        std::vector<C> ref = oracle::monic_from_power_sums(s);
        for (std::size_t i = 0; i <= n; ++i)
            worst_coeff = std::max(worst_coeff, std::abs(p[i] - ref[i]) / std::max(1.0, std::abs(ref[i])));
        CVector back = power_sums(find_roots(p).roots, n);
        for (std::size_t m = 0; m < n; ++m)
            worst_trip = std::max(worst_trip, std::abs(back[m] - s[m]) / std::max(1.0, std::abs(s[m])));
    }
    CHECK(worst_coeff < 1e-10);
    CHECK(worst_trip < 1e-9);
}

TEST_CASE("series operations")
{
    PowerSeries zero = PowerSeries::generate(5, [](std::size_t) { return C(0.0); });
    PowerSeries e = series_exp(zero);
    CHECK(std::abs(e[0] - C(1.0)) < 1e-15);
    for (std::size_t m = 1; m < 5; ++m)
        CHECK(std::abs(e[m]) < 1e-15);

    PowerSeries ones = PowerSeries::generate(5, [](std::size_t) { return C(1.0); });
    PowerSeries in = series_integrate(ones);
    CHECK(in.order() == 6);
    CHECK(std::abs(in[0]) == 0.0);
    for (std::size_t m = 1; m < 6; ++m)
        CHECK(std::abs(in[m] - C(1.0 / static_cast<double>(m))) < 1e-15);

    // log(1 - z) = -sum z^m / m; exp gives 1 - z.
    PowerSeries log1mz = series_integrate(PowerSeries::generate(8, [](std::size_t) { return C(-1.0); }));
    PowerSeries one_minus_z = series_exp(log1mz);
    CHECK(std::abs(one_minus_z[0] - C(1.0)) < 1e-15);
    CHECK(std::abs(one_minus_z[1] - C(-1.0)) < 1e-15);
    for (std::size_t m = 2; m < one_minus_z.order(); ++m)
        CHECK(std::abs(one_minus_z[m]) < 1e-14);

    PowerSeries a{1.0, 2.0, 3.0}, b{1.0, -1.0};
    PowerSeries prod = series_multiply(a, b);
    CHECK(prod.order() == 2);
    CHECK(std::abs(prod[1] - C(1.0)) < 1e-15);
    CHECK(series_add(a, b).order() == 2);
    CHECK_THROWS_AS(a.at(3), Error);
}

TEST_CASE("nullspace")
{
    ComplexMatrix a(1, 2);
    a << 1.0, -1.0;
    auto basis = nullspace(a);
    REQUIRE(basis.size() == 1);
    CHECK(std::abs(std::abs(basis[0][0]) - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(basis[0][0] - basis[0][1]) < 1e-12);

    std::mt19937_64 rng(3);
    ComplexMatrix full(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = 0; j < 5; ++j)
            full(i, j) = oracle::random_in_disk(rng, 1.0);
    CHECK(nullspace(full).empty());

    ComplexMatrix wide(3, 6);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 6; ++j)
            wide(i, j) = oracle::random_in_disk(rng, 1.0);
    auto nb = nullspace(wide, 1e-10);
    CHECK(nb.size() == 3);
    for (const auto& v : nb)
        CHECK((wide * to_eigen(v)).norm() <= 1e-10 * wide.norm());
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = 0; j < nb.size(); ++j)
        {
            C dot = (to_eigen(nb[i]).adjoint() * to_eigen(nb[j]))(0, 0);
            CHECK(std::abs(dot - C(i == j ? 1.0 : 0.0)) < 1e-12);
        }
}

TEST_CASE("sup_norm on closed-form functions")
{
    SupNormResult a = sup_norm([](double x) { return std::abs(x); }, -1.0, 1.0);
    CHECK(a.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(std::abs(a.argmax) - 1.0) < 1e-14);

    SupNormResult t5 = sup_norm([](double x) { return chebyshev_t(5, x); }, -1.0, 1.0);
    CHECK(t5.value == doctest::Approx(1.0).epsilon(1e-12));
    double k = std::acos(t5.argmax) * 5.0 / std::numbers::pi;
    CHECK(std::abs(k - std::round(k)) < 1e-6);

    for (std::size_t n = 1; n <= 50; ++n)
    {
        double v = sup_norm([n](double x) { return chebyshev_t(n, x); }, -1.0, 1.0).value;
        CHECK(std::abs(v - 1.0) <= 1e-10);
    }

    // Interior maximum away from grid points: 1 - (x - 0.3)^2.
    SupNormResult b = sup_norm([](double x) { return 1.0 - (x - 0.3) * (x - 0.3); }, -1.0, 1.0);
    CHECK(b.argmax == doctest::Approx(0.3).epsilon(1e-7));
    CHECK(b.value == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(sup_norm([](double x) { return x > 0.5 ? std::nan("") : x; }, -1.0, 1.0), Error);
}
