#include "doctest.h"
#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include "spfkit/error.hpp"
#include "spfkit/hsum.hpp"
#include "spfkit/roots.hpp"

using namespace spfkit;
using oracle::C;

namespace
{

PowerSeries random_series(std::mt19937_64& rng, std::size_t order)
{
    return PowerSeries::generate(order, [&](std::size_t) { return oracle::random_in_disk(rng, 1.0); });
}

C series_value(const PowerSeries& h, C z)
{
    return oracle::horner(std::vector<C>(h.coeffs().begin(), h.coeffs().end()), z);
}

C direct_power_sum(const CVector& x, std::size_t m)
{
    C s = 0.0;
    for (C v : x)
        s += oracle::ipow(v, m);
    return s;
}

} // namespace

TEST_CASE("differentiation nodes")
{
    const double r3 = std::sqrt(3.0);
    CHECK(oracle::multiset_distance(diff_nodes(2), {C((1 + r3) / 2), C((1 - r3) / 2)}) < 1e-14);
    CHECK(oracle::multiset_distance(diff_nodes(1), {C(1.0)}) < 1e-15);

    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 8; ++n)
    {
        CVector nodes = diff_nodes(n);
        for (std::size_t j = 1; j <= n; ++j)
            CHECK(std::abs(direct_power_sum(nodes, j) - C(static_cast<double>(j))) < 1e-10 * j);
        PowerSeries h = random_series(rng, n);
        HSum op{nodes, h};
        C z(0.3, -0.2);
        C dh = 0.0;
        for (std::size_t m = 1; m < n; ++m)
            dh += static_cast<double>(m) * h[m] * oracle::ipow(z, m);
        CHECK(std::abs(op(z) - series_value(h, z) - dh) < 1e-10);
    }

    // The v-recurrence yields the negated nodes for n = 2.
    CHECK(oracle::multiset_distance(diff_nodes(2, true), {C(-(1 + r3) / 2), C(-(1 - r3) / 2)}) < 1e-14);
}

TEST_CASE("integration nodes")
{
    CHECK(oracle::multiset_distance(int_nodes(1), {C(1.0)}) < 1e-15);
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n <= 8; ++n)
    {
        CVector nodes = int_nodes(n);
        for (std::size_t j = 1; j <= n; ++j)
            CHECK(std::abs(direct_power_sum(nodes, j) - C(1.0 / static_cast<double>(j))) < 1e-10);
        PowerSeries h = random_series(rng, n);
        HSum op{nodes, h};
        C z(0.4, 0.1);
        C integral = 0.0;
        for (std::size_t m = 0; m < n; ++m)
            integral += h[m] * oracle::ipow(z, m + 1) / static_cast<double>(m + 1);
        CHECK(std::abs(z * op(z) - integral) < 1e-10);
    }
    // Literal integration recurrence for n = 2: (lambda + 1/2)^2.
    CHECK(oracle::multiset_distance(int_nodes(2, true), {C(-0.5), C(-0.5)}) < 1e-7);
}

TEST_CASE("h-sum Pade interpolation")
{
    std::mt19937_64 rng(5);
    for (std::size_t n : {1u, 3u, 6u})
    {
        PowerSeries f = random_series(rng, n);
        PowerSeries h = PowerSeries::generate(n, [](std::size_t m) { return C(1.0 / (1.0 + m)); });
        HSum s = hsum_pade(f, h, n);
        CHECK(s.freqs.size() == n);
        CVector c = s.coefficients(n);
        for (std::size_t m = 0; m < n; ++m)
            CHECK(std::abs(c[m] - f[m]) < 1e-9);
    }
    PowerSeries f{1.0, 1.0};
    PowerSeries h{1.0, 0.0};
    CHECK_THROWS_AS(hsum_pade(f, h, 2), Error);
}

TEST_CASE("extrapolation frequencies and operator")
{
    for (double a : {1.5, 2.0, 3.0})
        for (std::size_t n = 1; n <= 8; ++n)
        {
            CVector fr = extrap_freqs(a, n);
            for (std::size_t m = 1; m <= n; ++m)
                CHECK(std::abs(direct_power_sum(fr, m) - std::pow(a, m - 1.0)) < 1e-9 * std::pow(a, m - 1.0));
            double bound = extrap_freq_bound(a, n);
            CHECK(bound == doctest::Approx(a - (a - 1) / n));
            for (C l : fr)
                CHECK(std::abs(l) <= bound * (1 + 1e-12));
        }

    std::mt19937_64 rng(6);
    const double a = 2.0;
    const std::size_t n = 4;
    PowerSeries h = random_series(rng, n);
    C z(0.2, 0.1);
    for (std::size_t mu : {1u, 2u, 3u})
        CHECK(std::abs(extrapolate(h, a, n, mu, z) - series_value(h, z)) < 1e-10);
    for (std::size_t m = 0; m < n; ++m)
        CHECK(std::abs(extrapolation_remainder_factor(a, n, 2, m)) < 1e-10);
    CHECK(std::abs(extrapolation_remainder_factor(a, n, 2, n)) > 1e-6);
    try
    {
        extrapolate(h, a, 10, 7, z);
        FAIL("expected size_limit");
    }
    catch (const Error& e)
    {
        CHECK(e.kind() == ErrorKind::size_limit);
    }
}

TEST_CASE("Prony reference system")
{
    PronySolution s = prony_solve(CVector{4.0, -1.0, 7.0, 5.0});
    REQUIRE(s.regular);
    REQUIRE(s.freqs.size() == 2);
    for (std::size_t k = 0; k < 2; ++k)
    {
        if (std::abs(s.freqs[k] - C(2.0)) < 1e-10)
            CHECK(std::abs(s.amps[k] - C(1.0)) < 1e-10);
        else
        {
            CHECK(std::abs(s.freqs[k] - C(-1.0)) < 1e-10);
            CHECK(std::abs(s.amps[k] - C(3.0)) < 1e-10);
        }
    }
    CHECK(s.moment_residual < 1e-12);

    PronySolution bad = prony_solve(CVector{1.0, 1.0, 1.0, 1.0});
    CHECK_FALSE(bad.regular);
    CHECK_FALSE(bad.diagnostics.empty());
}

TEST_CASE("Prony recovery of random sums")
{
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t)
    {
        std::size_t n = 1 + static_cast<std::size_t>(t % 5);
        CVector freqs, amps(n);
        while (freqs.size() < n)
        {
            C cand = std::polar(0.5 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng),
                                2 * M_PI * (static_cast<double>(freqs.size()) + 0.3 * std::uniform_real_distribution<double>(0, 1)(rng)) / n);
            freqs.push_back(cand);
        }
        for (auto& m : amps)
            m = C(1.0, 0.0) + oracle::random_in_disk(rng, 0.5);
        CVector s(2 * n);
        for (std::size_t m = 0; m < 2 * n; ++m)
            for (std::size_t k = 0; k < n; ++k)
                s[m] += amps[k] * oracle::ipow(freqs[k], m);
        PronySolution sol = prony_solve(s);
        REQUIRE(sol.regular);
        worst = std::max(worst, oracle::multiset_distance(sol.freqs, freqs));
        for (std::size_t k = 0; k < n; ++k)
        {
            auto it = std::min_element(sol.freqs.begin(), sol.freqs.end(),
                                       [&](C p, C q) { return std::abs(p - freqs[k]) < std::abs(q - freqs[k]); });
            worst = std::max(worst, std::abs(sol.amps[it - sol.freqs.begin()] - amps[k]));
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("Gauss quadrature matches the Jacobi-matrix eigen decomposition")
{
    AFSum g3 = gauss_quadrature(PowerSeries{1.0}, 3);
    const double r = std::sqrt(0.6);
    CHECK(oracle::multiset_distance(g3.freqs, {C(-r), C(0.0), C(r)}) < 1e-12);

    for (std::size_t n = 1; n <= 6; ++n)
    {
        Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t k = 1; k < n; ++k)
        {
            double b = k / std::sqrt(4.0 * k * k - 1.0);
            j(k - 1, k) = j(k, k - 1) = b;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
        AFSum g = gauss_quadrature(PowerSeries{1.0}, n);
        REQUIRE(g.freqs.size() == n);
        for (std::size_t k = 0; k < n; ++k)
        {
            double node = es.eigenvalues()(k);
            double weight = 2.0 * es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
            CHECK(std::abs(g.freqs[k] - C(node)) < 1e-12);
            CHECK(std::abs(g.amps[k] - C(weight)) < 1e-12);
        }
    }

    // (1/x) int_{-x}^{x} h for a polynomial of degree 2n - 1.
    std::mt19937_64 rng(8);
    PowerSeries h = random_series(rng, 8);
    AFSum g4 = gauss_quadrature(h, 4);
    C x(0.7, 0.2), exact = 0.0;
    for (std::size_t m = 0; m < 8; m += 2)
        exact += 2.0 * h[m] * oracle::ipow(x, m) / static_cast<double>(m + 1);
    CHECK(std::abs(g4(x) - exact) < 1e-12);
}

TEST_CASE("regularized differentiation")
{
    CHECK(reg_diff_q(3, 1.0) == doctest::Approx(-11.0));
    CHECK(reg_diff_q(5, 2.0) == doctest::Approx(-2.0 * 2.0 * (6.0 + 24.0) / 12.0));

    for (std::size_t n = 3; n <= 6; ++n)
    {
        RegDiffResult r = reg_diff(n, 1.0);
        CHECK(r.prony.regular);
        CHECK(r.closed_form_gap < 1e-9);
        CHECK(r.q == doctest::Approx(reg_diff_q(n, r.p_used)));

        std::mt19937_64 rng(9 + n);
        PowerSeries h = random_series(rng, n - 1);
        C z(0.3, 0.2), dh = 0.0;
        for (std::size_t m = 1; m + 1 < n; ++m)
            dh += static_cast<double>(m) * h[m] * oracle::ipow(z, m);
        CHECK(std::abs(reg_diff_apply(r, h, z) - dh) < 1e-9);
    }
}

TEST_CASE("regularized extrapolation")
{
    RegExtrapResult r = reg_extrap(2.0, 2, 1.0);
    CHECK(r.bound_holds);
    CHECK(r.distinct);
    CHECK(r.max_freq == doctest::Approx(1.72665).epsilon(1e-5));
    CHECK(r.freq_bound == doctest::Approx(2.0 * std::pow(1.0 + 1.0 / 4.0, -0.5)));
    CHECK(r.closed_form_gap < 1e-10);

    // Exact on polynomials of degree < 2n without the z^{n-1} term.
    std::mt19937_64 rng(10);
    for (std::size_t n = 2; n <= 5; ++n)
    {
        const double a = 1.5;
        RegExtrapResult e = reg_extrap(a, n, 0.5);
        CHECK(e.bound_holds);
        PowerSeries h = random_series(rng, 2 * n);
        CVector c(h.coeffs().begin(), h.coeffs().end());
        c[n - 1] = 0.0;
        PowerSeries hz(c);
        C z(0.3, -0.1);
        CHECK(std::abs(reg_extrap_apply(e, hz, z) - series_value(hz, a * z)) < 1e-9);
    }

    // Frequencies shrink as p grows.
    double prev = INFINITY;
    for (double p : {0.1, 0.5, 1.0, 2.0, 5.0})
    {
        double m = reg_extrap(2.0, 4, p).max_freq;
        CHECK(m < prev);
        prev = m;
    }

    PowerSeries geo = PowerSeries::generate(30, [](std::size_t) { return C(1.0); });
    double bound = reg_extrap_remainder_bound(geo, 2.0, 2, 0.1);
    double expected = 0.0;
    for (std::size_t m = 4; m < 30; ++m)
        expected += std::pow(0.2, static_cast<double>(m));
    CHECK(bound == doctest::Approx(expected).epsilon(1e-12));
}
