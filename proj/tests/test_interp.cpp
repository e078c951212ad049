#include "doctest.h"
#include "oracles.hpp"

#include <numbers>

#include "spfkit/error.hpp"
#include "spfkit/best.hpp"
#include "spfkit/interp.hpp"

using namespace spfkit;
using oracle::C;

namespace
{

PowerSeries exp_series(std::size_t order)
{
    double fact = 1.0;
    return PowerSeries::generate(order, [&](std::size_t m) {
        if (m > 0)
            fact *= static_cast<double>(m);
        return C(1.0 / fact);
    });
}

} // namespace

TEST_CASE("pade_spf reference cases")
{
    PowerSeries zero = PowerSeries::generate(3, [](std::size_t) { return C(0.0); });
    CHECK(pade_spf(zero, 3).order() == 0);
    CHECK(pade_spf_exp(zero, 3).order() == 0);

    PowerSeries geo = PowerSeries::generate(4, [](std::size_t) { return C(-1.0); });
    SimpleFraction a = pade_spf(geo, 1);
    CHECK(oracle::multiset_distance(a.poles(), {C(1.0)}) < 1e-14);
    SimpleFraction ae = pade_spf_exp(geo, 1);
    CHECK(oracle::multiset_distance(ae.poles(), {C(1.0)}) < 1e-14);

    const double h = std::sqrt(3.0) / 2.0;
    SimpleFraction e2 = pade_spf(exp_series(2), 2);
    CHECK(oracle::multiset_distance(e2.poles(), {C(-0.5, h), C(-0.5, -h)}) < 1e-12);
    CHECK(oracle::multiset_distance(pade_spf_exp(exp_series(2), 2).poles(), e2.poles()) < 1e-12);
    for (C z : {C(0.3, 0.2), C(-1.0, 0.5)})
        CHECK(std::abs(e2(z) - (2.0 * z + 1.0) / (z * z + z + 1.0)) < 1e-12);
    CVector mc = maclaurin_coefficients(e2, 3);
    CHECK(std::abs(mc[0] - C(1.0)) < 1e-12);
    CHECK(std::abs(mc[1] - C(1.0)) < 1e-12);
    CHECK(std::abs(mc[2] - C(0.5)) > 1e-3);
}

TEST_CASE("pade contact and uniqueness on random series")
{
    std::mt19937_64 rng(21);
    double coeff = 0.0, poles = 0.0;
    for (int t = 0; t < 100; ++t)
    {
        std::size_t n = 1 + static_cast<std::size_t>(t % 15);
        CVector c(n);
        for (auto& x : c)
            x = oracle::random_in_disk(rng, 0.5);
        PowerSeries f(c);
        SimpleFraction a = pade_spf(f, n);
        CVector mc = maclaurin_coefficients(a, n);
        // Independent check: Maclaurin coefficients of sum 1/(z - z_k) are -sum z_k^{-m-1}.
        for (std::size_t m = 0; m < n; ++m)
        {
            C direct = 0.0;
            for (C p : a.poles())
                direct -= oracle::ipow(1.0 / p, m + 1);
            coeff = std::max({coeff, std::abs(direct - c[m]), std::abs(mc[m] - c[m])});
        }
        poles = std::max(poles, oracle::multiset_distance(a.poles(), pade_spf_exp(f, n).poles()));
    }
    CHECK(coeff <= 1e-9);
    CHECK(poles <= 1e-7);
}

TEST_CASE("pade remainder")
{
    PowerSeries e = exp_series(20);
    SimpleFraction r = pade_spf(e, 2);
    C z = 0.1;
    CHECK(std::abs(pade_remainder(e, r, 2, z) - (std::exp(z) - r(z))) < 1e-12);
    CHECK(std::abs(pade_remainder(e, r, 2, 0.0)) < 1e-15);

    // f itself an SPF of order 2.
    SimpleFraction s(CVector{C(2.0, 1.0), C(-3.0, 0.5)});
    PowerSeries fs(maclaurin_coefficients(s, 12));
    SimpleFraction back = pade_spf(fs, 2);
    CHECK(std::abs(pade_remainder(fs, back, 2, C(0.2, 0.1))) < 1e-12);
}

TEST_CASE("error bound constants")
{
    double prev = 1.0;
    for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 100u, 1000u, 10000u})
    {
        double e = pade_epsilon(n);
        CHECK(e > 0.0);
        CHECK(e < prev);
        CHECK(e * e == doctest::Approx(std::pow(1.0 - e, static_cast<double>(n) + 1.0)).epsilon(1e-12));
        prev = e;
    }
    // eps_n n / ln n approaches 2 from below slowly.
    double r1 = pade_epsilon(100) * 100 / std::log(100.0);
    double r2 = pade_epsilon(10000) * 10000 / std::log(10000.0);
    CHECK(r1 < r2);
    CHECK(r2 < 2.0);

    double small = pade_error_bound(1.0, 8, 1e-6, 0.5);
    double big = pade_error_bound(1.0, 8, 0.25, 0.5);
    const double e8 = pade_epsilon(8), z = 0.25, r = 0.5;
    double expected = 1.0 / (1.0 - z) * std::pow(z / r, 8) * std::pow((1 - e8 + r) / (1 - e8 - r), 8) *
                      (1.0 + std::log(r / (r - z)));
    CHECK(big == doctest::Approx(expected).epsilon(1e-12));
    CHECK(small < 1e-30);
    CHECK(big > small);
    CHECK_THROWS_AS(pade_error_bound(1.0, 8, 0.6, 0.5), Error);
    CHECK_THROWS_AS(pade_error_bound(1.0, 2, 0.1, 0.9), Error);
}

TEST_CASE("error bound against random admissible series")
{
    std::mt19937_64 rng(31);
    std::size_t violations = 0;
    for (int t = 0; t < 100; ++t)
    {
        // f_m = -g^{m+1} with |g| <= 1 is admissible for a = 1.
        C g = oracle::random_in_disk(rng, 1.0);
        PowerSeries f = PowerSeries::generate(8, [&](std::size_t m) { return -oracle::ipow(g, m + 1); });
        SimpleFraction r = pade_spf(f, 8);
        C z = 0.25;
        double err = std::abs(-g / (1.0 - g * z) - r(z));
        if (!(err <= pade_error_bound(1.0, 8, z, 0.5)))
            ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("frequency bound lemma")
{
    CHECK(frequency_bound_check(CVector{0.0, 0.0, 0.0}, 1.0));
    CVector s(6);
    for (std::size_t m = 0; m < 6; ++m)
        s[m] = std::pow(1.5, static_cast<double>(m + 1));
    CHECK(frequency_bound_check(s, 1.5));

    std::mt19937_64 rng(41);
    std::size_t failures = 0;
    for (int t = 0; t < 500; ++t)
    {
        std::size_t n = 1 + static_cast<std::size_t>(t % 15);
        double a = 0.5 + static_cast<double>(t % 4) * 0.5;
        CVector sums(n);
        for (std::size_t m = 0; m < n; ++m)
            sums[m] = oracle::random_in_disk(rng, std::pow(a, static_cast<double>(m + 1)));
        if (!frequency_bound_check(sums, a))
            ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("node classification")
{
    CVector nodes{-1.0, 1.0};
    auto s1 = classify_nodes(ComplexPolynomial{1.0, 2.0, 1.0}, nodes);
    CHECK(s1[0] == NodeStatus::singular);
    CHECK(s1[1] == NodeStatus::regular);
    auto s2 = classify_nodes(ComplexPolynomial{1.0, 1.0, 1.0}, nodes);
    CHECK(s2[0] == NodeStatus::regular);
    CHECK(s2[1] == NodeStatus::regular);
    auto s3 = classify_nodes(ComplexPolynomial::constant(1.0), nodes);
    CHECK(s3[0] == NodeStatus::regular);
}

TEST_CASE("generalized interpolation with simple nodes")
{
    CVector nodes{-1.0, 1.0}, values{-1.0, 1.0};
    GeneralizedFamily fam = generalized_interp_simple(nodes, values, 2);
    CHECK(fam.basis.size() == 2);
    CHECK(fam.verdict == OrdinaryVerdict::solvable);
    REQUIRE(fam.regular.has_value());
    CHECK(fam.regular->all_regular());
    for (std::size_t j = 0; j < 2; ++j)
        CHECK(std::abs(fam.regular->spf(nodes[j]) - values[j]) < 1e-9);

    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    CVector n5{-s2, s2, -1.0 / s3, 1.0 / s3, 0.0};
    CVector v5{-3.0 * s2, 3.0 * s2, -s3, s3, 1.0};
    GeneralizedFamily f5 = generalized_interp_simple(n5, v5, 5);
    CHECK(f5.verdict == OrdinaryVerdict::unsolvable);
    REQUIRE(f5.forced_singular.size() == 1);
    CHECK(f5.forced_singular[0] == 4);
    // Every solution is a combination of z^2 - z^4 and 2z^3 - 3z^5.
    ComplexMatrix sys = generalized_system(InterpolationTable{n5, {{v5[0]}, {v5[1]}, {v5[2]}, {v5[3]}, {v5[4]}}}, 5);
    ComplexVector q1(6), q2(6);
    q1 << 0.0, 0.0, 1.0, 0.0, -1.0, 0.0;
    q2 << 0.0, 0.0, 0.0, 2.0, 0.0, -3.0;
    CHECK((sys * q1).norm() < 1e-12);
    CHECK((sys * q2).norm() < 1e-12);
    CHECK(f5.basis.size() == 2);

    // Values sampled from a known fraction are reproduced.
    SimpleFraction known(CVector{C(2.0, 1.0), C(-1.5, -0.5), C(0.5, 2.0)});
    CVector xs{C(0.1, 0.0), C(-0.4, 0.3), C(0.6, -0.2)};
    CVector bs;
    for (C x : xs)
        bs.push_back(known(x));
    GeneralizedFamily fk = generalized_interp_simple(xs, bs, 3);
    REQUIRE(fk.regular.has_value());
    for (std::size_t j = 0; j < xs.size(); ++j)
        CHECK(std::abs(fk.regular->spf(xs[j]) - bs[j]) < 1e-8);
    CHECK(fk.basis.size() == 1);
    CHECK(oracle::multiset_distance(fk.regular->spf.poles(), known.poles()) < 1e-7);
}

TEST_CASE("multiple-node interpolation reproduces the Pade fraction")
{
    std::mt19937_64 rng(51);
    for (std::size_t n : {2u, 3u, 5u})
    {
        CVector c(n);
        for (auto& x : c)
            x = oracle::random_in_disk(rng, 0.5);
        CVector b(n);
        double fact = 1.0;
        for (std::size_t s = 0; s < n; ++s)
        {
            if (s > 0)
                fact *= static_cast<double>(s);
            b[s] = fact * c[s];
        }
        GeneralizedFamily fam = generalized_interp_multiple(InterpolationTable{CVector{0.0}, {b}}, n);
        REQUIRE(fam.regular.has_value());
        SimpleFraction pade = pade_spf(PowerSeries(c), n);
        CHECK(oracle::multiset_distance(fam.regular->spf.poles(), pade.poles()) < 1e-7);
    }
}

TEST_CASE("guaranteed solvability for M <= n - k + 1")
{
    std::mt19937_64 rng(61);
    std::size_t failures = 0;
    for (int t = 0; t < 200; ++t)
    {
        std::size_t k = 1 + static_cast<std::size_t>(t % 3);
        std::size_t n = k + 2 + static_cast<std::size_t>(t % 4);
        std::size_t budget = n - k + 1;
        InterpolationTable table;
        std::size_t used = 0;
        for (std::size_t j = 0; j < k; ++j)
        {
            table.nodes.push_back(oracle::random_in_disk(rng, 1.0));
            std::size_t m = (j + 1 == k) ? std::max<std::size_t>(1, std::min<std::size_t>(budget - used, 3)) : 1;
            if (used + m > budget)
                m = budget - used;
            CVector vals(m);
            for (auto& v : vals)
                v = oracle::random_in_disk(rng, 2.0);
            table.values.push_back(vals);
            used += m;
        }
        GeneralizedFamily fam = generalized_interp_multiple(table, n);
        if (fam.verdict != OrdinaryVerdict::solvable)
            ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("full generalized task always has solutions")
{
    std::mt19937_64 rng(71);
    for (std::size_t n = 1; n <= 10; ++n)
    {
        InterpolationTable table;
        std::size_t used = 0;
        while (used < n)
        {
            std::size_t m = std::min<std::size_t>(n - used, 1 + static_cast<std::size_t>(used % 3));
            table.nodes.push_back(oracle::random_in_disk(rng, 1.0));
            CVector vals(m);
            for (auto& v : vals)
                v = oracle::random_in_disk(rng, 2.0);
            table.values.push_back(vals);
            used += m;
        }
        CHECK(generalized_interp_multiple(table, n).basis.size() >= 1);
    }
}

TEST_CASE("constant interpolation")
{
    GeneralizedSolution one = interpolate_constant(0.5, CVector{0.0});
    CHECK(oracle::multiset_distance(one.spf.poles(), {C(-2.0)}) < 1e-12);
    CHECK(std::abs(one.spf(0.0) - C(0.5)) < 1e-12);

    ComplexPolynomial q = constant_generating_polynomial(0.7, CVector{-0.5, 0.5, 0.0});
    for (C c : q.coeffs())
        CHECK(std::abs(c.imag()) < 1e-14);

    std::mt19937_64 rng(81);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 12; ++n)
    {
        CVector nodes(n);
        for (auto& x : nodes)
            x = oracle::random_in_disk(rng, 1.0);
        C c = oracle::random_in_disk(rng, 1.0) + C(0.1, 0.0);
        GeneralizedSolution s = interpolate_constant(c, nodes);
        CHECK(s.q.degree() == static_cast<int>(n));
        ComplexPolynomial pi = ComplexPolynomial::from_roots(nodes);
        ComplexPolynomial qm = s.q.monic();
        for (int k = 0; k < 50; ++k)
        {
            C z = oracle::random_in_disk(rng, 1.5);
            C rhs = -c * pi(z) / qm(z);
            worst = std::max(worst, std::abs((s.spf(z) - c) - rhs) / std::max(1.0, std::abs(rhs)));
        }
    }
    CHECK(worst <= 1e-10);

    const double c = 0.4;
    for (std::size_t n = 2; n <= 8; ++n)
    {
        std::vector<double> t = chebyshev_nodes(n);
        CVector tn(t.begin(), t.end());
        GeneralizedSolution cs = interpolate_constant(c, tn);
        CHECK(cs.all_regular());
        double err = sup_norm([&](double x) { return constant_residual(c, t, x); }, -1.0, 1.0).value;
        double direct = 0.0;
        for (int k = 0; k <= 2000; ++k)
        {
            double x = -1.0 + k / 1000.0;
            direct = std::max(direct, std::abs(cs.spf(x) - c));
        }
        CHECK(std::abs(direct - err) <= 1e-3 * err + 1e-14);
        CHECK(err <= c * (1 - c) / ((1 - 2 * c) * std::ldexp(1.0, static_cast<int>(2 * n - 1)) * std::tgamma(n + 1.0)));
        for (C p : cs.spf.poles())
            CHECK(std::abs(p) > 1.0);
    }
}
