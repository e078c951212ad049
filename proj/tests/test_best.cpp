#include "doctest.h"
#include "oracles.hpp"

#include <numbers>

#include "spfkit/best.hpp"
#include "spfkit/error.hpp"

using namespace spfkit;
using oracle::C;

namespace
{

/// min over real poles a outside [-1, 1] of max_x |1/(x - a) - c|, by grid search.
double brute_order_one(double c)
{
    double best = INFINITY;
    for (int i = 0; i <= 4000; ++i)
    {
        double t = 1.0 + 1e-3 + i * 5e-3;
        for (double a : {t, -t})
        {
            double dev = 0.0;
            for (int k = 0; k <= 400; ++k)
            {
                double x = -1.0 + k / 200.0;
                dev = std::max(dev, std::abs(1.0 / (x - a) - c));
            }
            best = std::min(best, dev);
        }
    }
    return best;
}

} // namespace

TEST_CASE("Remez for a constant, order one")
{
    RemezResult r = remez_constant(0.5, 1);
    CHECK(r.converged);
    CHECK(r.deviation == doctest::Approx((std::sqrt(2.0) - 1.0) / 2.0).epsilon(1e-9));
    REQUIRE(r.spf.order() == 1);
    CHECK(std::abs(r.spf.poles()[0] - C(-1.0 - std::sqrt(2.0))) < 1e-6);
    double brute = brute_order_one(0.5);
    CHECK(std::abs(brute - r.deviation) < 1e-3);
    CHECK(r.deviation <= brute + 1e-12);
}

TEST_CASE("Remez iterations, alternance and bounds")
{
    for (double c : {0.1, 0.3})
        for (std::size_t n : {4u, 6u})
        {
            RemezResult r = remez_constant(c, n);
            CHECK(r.converged);
            CHECK(r.equalization <= 1e-8);
            CHECK(r.alternance.count == n + 1);
            for (std::size_t i = 1; i < r.history.size(); ++i)
                CHECK(r.history[i] <= r.history[i - 1] * (1 + 1e-12));
            DeviationBounds b = constant_deviation_bounds(c, n);
            CHECK(r.deviation >= b.lower);
            CHECK(r.deviation <= b.upper);
            CHECK(r.in_guaranteed_regime == (c < n / 8.0));

            auto residual = [&](double x) { return -constant_residual(c, r.nodes, x); };
            CriterionReport cr = alternance_criterion(residual, r.spf, n, 1e-6);
            CHECK(cr.verdict == CriterionVerdict::certified_best);

            // The alternance gives a lower bound matching the deviation.
            double vp = vallee_poussin_bound(residual, r.alternance.points);
            CHECK(vp <= r.deviation * (1 + 1e-12));
            CHECK(vp >= r.deviation * (1 - 1e-6));
        }
    CHECK(remez_constant(-0.3, 5).deviation == doctest::Approx(remez_constant(0.3, 5).deviation).epsilon(1e-8));
}

TEST_CASE("constant residual agrees with direct evaluation")
{
    std::vector<double> nodes{-0.8, -0.1, 0.5};
    const double c = 0.3;
    for (double x : {-1.0, -0.5, 0.2, 0.9})
    {
        // Direct: rho - c = -c Pi / Q with Q = sum_k c^{-k} Pi^{(k)}.
        ComplexPolynomial pi = ComplexPolynomial::from_roots(CVector(nodes.begin(), nodes.end()));
        ComplexPolynomial q = pi;
        for (unsigned k = 1; k <= 3; ++k)
            q = q + pi.derivative(k) * std::pow(c, -static_cast<double>(k));
        double direct = (-c * pi(x) / q(x)).real();
        CHECK(constant_residual(c, nodes, x) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("alternance criterion on the non-uniqueness example")
{
    double ls = nonuniqueness_lambda_star();
    CHECK(ls > 1.0);
    CHECK(ls < 2.0);
    CHECK(nonuniqueness_residual(-1.0, ls) == doctest::Approx(1.0).epsilon(1e-12));
    double lowest = INFINITY;
    for (int k = 0; k <= 20000; ++k)
        lowest = std::min(lowest, nonuniqueness_residual(-1.0 + k / 10000.0, ls));
    CHECK(lowest == doctest::Approx(-1.0).epsilon(1e-7));
    SimpleFraction spf = from_polynomial(ComplexPolynomial{1.0, ls, 1.0});
    auto f = [](double x) { return x + 1.0; };
    AlternanceReport a = alternance_detect(f, spf, -1.0, 1.0);
    CHECK(a.count == 3);
    CHECK(a.deviation == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(alternance_criterion(residual_function(f, spf), spf, 2).verdict == CriterionVerdict::not_applicable);
    CHECK(alternance_detect(f, from_polynomial(ComplexPolynomial{1.0, 1.0, 1.0}), -1.0, 1.0).count == 1);
    CHECK_THROWS_AS(alternance_criterion(f, SimpleFraction(CVector{C(2.0, 1.0)}), 1), Error);
}

TEST_CASE("Vallee Poussin bound")
{
    auto t3 = [](double x) { return chebyshev_t(3, x); };
    std::vector<double> pts;
    for (int k = 3; k >= 0; --k)
        pts.push_back(std::cos(k * std::numbers::pi / 3.0));
    CHECK(vallee_poussin_bound(t3, pts) == doctest::Approx(1.0).epsilon(1e-14));
    std::vector<double> same{0.1, 0.2};
    CHECK_THROWS_AS(vallee_poussin_bound([](double) { return 1.0; }, same), Error);
}

TEST_CASE("extremal fractions")
{
    CHECK_THROWS_AS(extremal_fraction(1.0, 3), Error);
    CHECK_THROWS_AS(extremal_fraction(2.0, 0), Error);
    for (std::size_t n : {1u, 3u, 7u})
        for (double delta : {0.2, 0.5})
        {
            double omega = omega_from_delta(delta, n);
            double a = std::pow(omega, 1.0 / n);
            CHECK(a + 1.0 / a == doctest::Approx(2.0 * (1.0 + delta)).epsilon(1e-13));
            ExtremalFraction ef = extremal_fraction(omega, n);
            CHECK(ef.poles.size() == n);
            CHECK(ef.weighted_norm() == doctest::Approx(2.0 * n * omega / (omega * omega - 1.0)));
            CHECK(ef.weighted_norm() == doctest::Approx(chebyshev_weighted_norm(delta, n)).epsilon(1e-12));
            SimpleFraction s = ef.spf();
            for (C z : {C(0.3, 0.4), C(2.0, -1.0), C(-0.5, 1.5)})
                CHECK(std::abs(ef.closed_form(z) - s(z)) < 1e-10 * std::max(1.0, std::abs(s(z))));
            for (double x : ef.alternation_points())
                CHECK(std::sqrt(1 - x * x) * std::abs(s(x)) == doctest::Approx(ef.weighted_norm()).epsilon(1e-9));
        }
    CHECK(chebyshev_t(4, 0.5) == doctest::Approx(-0.5));
    CHECK(chebyshev_t(2, 3.0) == doctest::Approx(17.0));
}

TEST_CASE("counterexample with 2n - 2 zeros")
{
    for (std::size_t m : {1u, 2u})
    {
        CounterexampleReport r = counterexample_2n_alternance(m);
        CHECK(r.achieved);
        CHECK(r.zeros.size() == 2 * r.n - 2);
        CHECK(std::is_sorted(r.zeros.begin(), r.zeros.end()));
        for (double z : r.zeros)
        {
            CHECK(z > -1.0);
            CHECK(z < 1.0);
        }
    }
}

TEST_CASE("permanent, Cauchy determinant and Borchardt identity")
{
    ComplexMatrix ones = ComplexMatrix::Constant(3, 3, 1.0);
    CHECK(std::abs(permanent(ones) - C(6.0)) < 1e-12);
    CHECK(std::abs(permanent(ComplexMatrix::Identity(4, 4)) - C(1.0)) < 1e-12);
    ComplexMatrix m2(2, 2);
    m2 << 1.0, 2.0, 3.0, 4.0;
    CHECK(std::abs(permanent(m2) - C(10.0)) < 1e-12);

    CVector x{C(1.0)}, y{C(0.25)};
    CHECK(std::abs(cauchy_determinant(x, y) - C(1.0 / 0.75)) < 1e-14);

    std::mt19937_64 rng(29);
    for (std::size_t n = 1; n <= 6; ++n)
    {
        CVector pts;
        while (pts.size() < 2 * n)
        {
            C cand = oracle::random_in_disk(rng, 2.0);
            bool ok = true;
            for (C p : pts)
                ok = ok && std::abs(p - cand) >= 0.25;
            if (ok)
                pts.push_back(cand);
        }
        CVector xi(pts.begin(), pts.begin() + n), z(pts.begin() + n, pts.end());
        BorchardtReport b = borchardt_check(xi, z);
        CHECK(b.identity_error < 1e-10);
        CHECK(b.cauchy_error < 1e-10);
        ComplexMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = 1.0 / (xi[i] - z[j]);
        CHECK(std::abs(b.det - a.determinant()) < 1e-10 * std::abs(a.determinant()));
    }
}
