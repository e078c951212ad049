#include "spfkit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "spfkit/best.hpp"
#include "spfkit/diff_tower.hpp"
#include "spfkit/error.hpp"
#include "spfkit/hsum.hpp"
#include "spfkit/interp.hpp"
#include "spfkit/metrics.hpp"

namespace spfkit
{

namespace
{

using Rng = std::mt19937_64;

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex point_in_disk(Rng& rng, double radius)
{
    double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
    double t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    return std::polar(r, t);
}

Complex ipow(Complex z, std::size_t k)
{
    Complex r = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        r *= z;
    return r;
}

/// Greedy matching distance between two parameter lists (amplitudes follow their frequencies).
double match_error(const CVector& fa, const CVector& aa, const CVector& fb, const CVector& ab)
{
    std::vector<bool> used(fb.size(), false);
    double worst = 0.0;
    for (std::size_t i = 0; i < fa.size(); ++i)
    {
        std::size_t best = fb.size();
        double d = INFINITY;
        for (std::size_t j = 0; j < fb.size(); ++j)
            if (!used[j] && std::abs(fa[i] - fb[j]) < d)
            {
                d = std::abs(fa[i] - fb[j]);
                best = j;
            }
        if (best == fb.size())
            return INFINITY;
        used[best] = true;
        worst = std::max({worst, d, std::abs(aa[i] - ab[best]) / std::max(1.0, std::abs(aa[i]))});
    }
    return worst;
}

// 1
AcceptanceResult pade_contact(Rng& rng)
{
    double coeff_err = 0.0, pole_err = 0.0;
    for (int t = 0; t < 100; ++t)
    {
        std::size_t n = 1 + static_cast<std::size_t>(t % 15);
        PowerSeries f = PowerSeries::generate(n, [&](std::size_t) { return point_in_disk(rng, 0.5); });
        SimpleFraction a = pade_spf(f, n);
        SimpleFraction b = pade_spf_exp(f, n);
        CVector mc = maclaurin_coefficients(a, n);
        for (std::size_t m = 0; m < n; ++m)
            coeff_err = std::max(coeff_err, std::abs(mc[m] - f.at(m)));
        pole_err = std::max(pole_err, a.order() == b.order() ? pole_distance(a.poles(), b.poles()) : INFINITY);
    }
    return {1, "pade_contact", coeff_err <= 1e-9 && pole_err <= 1e-7,
            fmt("max coefficient error %.3e (limit 1e-9), max pole distance power-sum vs exp route %.3e (limit 1e-7)",
                coeff_err, pole_err)};
}

// 2
AcceptanceResult pade_error_bound_check(Rng& rng)
{
    const double a = 1.0, r = 0.5;
    std::size_t violations = 0, samples = 0;
    double worst_ratio = 0.0;
    for (std::size_t n : {4u, 8u})
        for (int t = 0; t < 100; ++t)
        {
            // f_m = -sum w_j g_j^{m+1} with |g_j| <= a and sum w_j <= 1 gives |f_m| <= a^{m+1}.
            std::size_t terms = 1 + static_cast<std::size_t>(t % 4);
            CVector g(terms), w(terms);
            double wsum = 0.0;
            for (std::size_t j = 0; j < terms; ++j)
            {
                g[j] = point_in_disk(rng, a);
                w[j] = uniform(rng, 0.0, 1.0);
                wsum += w[j].real();
            }
            for (auto& x : w)
                x /= wsum;
            PowerSeries f = PowerSeries::generate(n, [&](std::size_t m) {
                Complex s = 0.0;
                for (std::size_t j = 0; j < terms; ++j)
                    s -= w[j] * ipow(g[j], m + 1);
                return s;
            });
            auto exact = [&](Complex z) {
                Complex s = 0.0;
                for (std::size_t j = 0; j < terms; ++j)
                    s -= w[j] * g[j] / (1.0 - g[j] * z);
                return s;
            };
            SimpleFraction rho = pade_spf(f, n);
            for (int k = 0; k < 20; ++k)
            {
                Complex z = point_in_disk(rng, 0.999 * r);
                double err = std::abs(exact(z) - rho(z));
                double bound = pade_error_bound(a, n, z, r);
                ++samples;
                worst_ratio = std::max(worst_ratio, err / bound);
                if (!(err <= bound))
                    ++violations;
            }
        }
    return {2, "pade_error_bound", violations == 0,
            fmt("%zu violations over %zu samples, max error/bound %.3e", violations, samples, worst_ratio)};
}

// 3
AcceptanceResult constant_chebyshev(Rng&)
{
    const double c = 0.4;
    bool ok = true;
    double worst_ratio = 0.0, min_pole = INFINITY;
    for (std::size_t n = 2; n <= 10; ++n)
    {
        std::vector<double> nodes = chebyshev_nodes(n);
        double err = sup_norm([&](double x) { return constant_residual(c, nodes, x); }, -1.0, 1.0).value;
        double bound = c * (1.0 - c) / ((1.0 - 2.0 * c) * std::ldexp(1.0, static_cast<int>(2 * n - 1)) * std::tgamma(n + 1.0));
        worst_ratio = std::max(worst_ratio, err / bound);
        ok = ok && err <= bound;
        CVector cn(nodes.begin(), nodes.end());
        GeneralizedSolution sol = interpolate_constant(c, cn);
        ok = ok && sol.all_regular();
        for (Complex p : sol.spf.poles())
            min_pole = std::min(min_pole, std::abs(p));
    }
    ok = ok && min_pole > 1.0;
    return {3, "constant_chebyshev_nodes", ok,
            fmt("max sup-error/bound %.3f, min pole modulus %.4f", worst_ratio, min_pole)};
}

// 4
AcceptanceResult remez_constants(Rng&)
{
    bool ok = true;
    double worst_eq = 0.0;
    std::string fails;
    for (double c : {0.1, 0.3, 0.5})
        for (std::size_t n = 4; n <= 8; ++n)
        {
            RemezResult r = remez_constant(c, n);
            DeviationBounds b = constant_deviation_bounds(c, n);
            bool here = r.deviation >= b.lower && r.deviation <= b.upper && r.alternance.count == n + 1 &&
                        r.equalization <= 1e-8;
            worst_eq = std::max(worst_eq, r.equalization);
            if (!here)
                fails += fmt(" (c=%g,n=%zu)", c, n);
            ok = ok && here;
        }
    return {4, "remez_constants", ok,
            fmt("max equalization %.3e%s%s", worst_eq, fails.empty() ? "" : "; failing:", fails.c_str())};
}

// 5
AcceptanceResult extremal_norm(Rng&)
{
    double worst_rel = 0.0;
    for (double delta : {0.5, 0.8})
        for (std::size_t n = 1; n <= 25; ++n)
        {
            ExtremalFraction ef = extremal_fraction(omega_from_delta(delta, n), n);
            auto weighted = [&](double x) {
                double s = std::sqrt(std::max(0.0, 1.0 - x * x));
                return s == 0.0 ? 0.0 : s * std::abs(ef.closed_form(x));
            };
            double numeric = sup_norm(weighted, -1.0, 1.0).value;
            double expected = chebyshev_weighted_norm(delta, n);
            worst_rel = std::max(worst_rel, std::abs(numeric - expected) / expected);
        }
    bool at_one = true;
    double worst_value = 0.0;
    for (std::size_t n = 5; n <= 40; ++n)
    {
        SimpleFraction spf = extremal_fraction(static_cast<double>(n * n), n).spf();
        SupNormResult s = sup_norm([&](double x) { return std::abs(spf(x)); }, -1.0, 1.0);
        // For even n the maximum is also attained at x = -1.
        at_one = at_one && s.value <= std::abs(spf(1.0)) * (1.0 + 1e-12);
        worst_value = std::max(worst_value, s.value);
    }
    bool ok = worst_rel <= 1e-6 && at_one && worst_value < 3.0;
    return {5, "extremal_weighted_norm", ok,
            fmt("max relative norm error %.3e; omega=n^2: max at x=1 %s, largest max %.6f", worst_rel,
                at_one ? "yes" : "no", worst_value)};
}

CVector upper_poles(Rng& rng, std::size_t n)
{
    CVector p(n);
    for (auto& z : p)
        z = Complex(uniform(rng, -3.0, 3.0), uniform(rng, 0.05, 2.0));
    return p;
}

// 6
AcceptanceResult quadrature_identity(Rng& rng)
{
    double worst = 0.0, worst_mu = 0.0;
    for (int t = 0; t < 50; ++t)
    {
        HalfPlanePoles hp(upper_poles(rng, 1 + static_cast<std::size_t>(t % 10)));
        double integral = integrate_real_line([&](double x) { return std::norm(hp.rho(x)); }, hp.poles());
        double mu2 = integrate_real_line([&](double x) { return hp.mu(x) * hp.mu(x); }, hp.poles());
        worst_mu = std::max(worst_mu, std::abs(2.0 * mu2 - integral) / integral);
        for (int k = 0; k < 5; ++k)
        {
            double phi = uniform(rng, 0.01, 2.0 * std::numbers::pi - 0.01);
            worst = std::max(worst, std::abs(l2_quadrature(hp, phi) - integral) / integral);
        }
    }
    return {6, "quadrature_identity", worst <= 1e-6 && worst_mu <= 1e-6,
            fmt("max relative error quadrature vs integral %.3e, 2|mu|^2 vs integral %.3e", worst, worst_mu)};
}

// 7
AcceptanceResult inequalities(Rng& rng)
{
    std::size_t v_two = 0, v_sup = 0, v_circle = 0, skipped = 0;
    for (int t = 0; t < 1000; ++t)
    {
        HalfPlanePoles hp(upper_poles(rng, 1 + static_cast<std::size_t>(t % 20)));
        for (const auto& c : inequality_suite(hp, checks::two_sided_l2_sup | checks::sup_vs_lr))
            if (c.asserted && !c.skipped && !c.holds)
                ++(c.name == "sup_vs_lr" ? v_sup : v_two);
    }
    for (int t = 0; t < 1000; ++t)
    {
        std::size_t n = 1 + static_cast<std::size_t>(t % 20);
        CVector p(n);
        for (auto& z : p)
            z = std::polar(uniform(rng, 1.05, 3.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
        for (const auto& c : derivative_suite(SimpleFraction(p), checks::circle_derivative))
        {
            if (c.skipped)
                ++skipped;
            else if (!c.holds)
                ++v_circle;
        }
    }
    bool ok = v_two + v_sup + v_circle + skipped == 0;
    return {7, "metric_inequalities", ok,
            fmt("violations: two_sided_l2_sup %zu, sup_vs_lr %zu, circle_derivative %zu (skipped %zu) over 1000 "
                "instances each",
                v_two, v_sup, v_circle, skipped)};
}

// 8
AcceptanceResult first_order_equality(Rng&)
{
    double gap = 0.0;
    for (Complex z : {Complex(0.0, 1.0), Complex(0.3, 0.5), Complex(-1.0, 2.0)})
        gap = std::max(gap, first_order_equality_gap(HalfPlanePoles({z}), -50.0, 50.0, 10000));
    return {8, "first_order_derivative_equality", gap <= 1e-12, fmt("max discrepancy %.3e", gap)};
}

// 9
AcceptanceResult ode_identity(Rng& rng)
{
    DiffOperatorTower tower = build_tower(6);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 6; ++n)
        for (int t = 0; t < 50; ++t)
        {
            CVector p(n);
            for (auto& z : p)
                z = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
            SimpleFraction spf(p);
            for (int k = 0; k < 10; ++k)
            {
                Complex z;
                double d;
                do
                {
                    z = Complex(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
                    d = INFINITY;
                    for (Complex q : p)
                        d = std::min(d, std::abs(z - q));
                } while (d < 0.1);
                double wmax = 0.0;
                for (unsigned i = 0; i <= n; ++i)
                    wmax = std::max(wmax, std::abs(eval(spf, z, i)));
                double scale = std::pow(1.0 + wmax, static_cast<double>(n + 1));
                worst = std::max(worst, std::abs(ode_residual(tower, spf, n, z)) / scale);
            }
        }
    return {9, "ode_tower_identity", worst <= 1e-8, fmt("max scaled residual %.3e", worst)};
}

// 10
AcceptanceResult worked_examples(Rng&)
{
    std::string detail;
    bool ok = true;

    // Two-node family: Q = z and Q = z^2 + alpha z + 1 solve Q' = b Q at (-1,-1), (1,1).
    CVector nodes{-1.0, 1.0}, values{-1.0, 1.0};
    GeneralizedFamily fam = generalized_interp_simple(nodes, values, 2);
    ComplexMatrix sys = generalized_system(InterpolationTable{nodes, {{-1.0}, {1.0}}}, 2);
    bool family_ok = fam.basis.size() == 2;
    for (double alpha : {-3.0, -2.0, 0.0, 0.5, 2.0, 3.0})
    {
        ComplexVector q(3);
        q << 1.0, alpha, 1.0;
        family_ok = family_ok && (sys * q).norm() <= 1e-12;
        auto status = classify_nodes(ComplexPolynomial{1.0, alpha, 1.0}, nodes);
        bool regular = status[0] == NodeStatus::regular && status[1] == NodeStatus::regular;
        family_ok = family_ok && regular == (std::abs(alpha) != 2.0);
    }
    ComplexVector qz(3);
    qz << 0.0, 1.0, 0.0;
    family_ok = family_ok && (sys * qz).norm() <= 1e-12;
    ok = ok && family_ok;
    detail += fmt("two-node family %s; ", family_ok ? "ok" : "FAILED");

    // Five-node table: every solution vanishes at 0.
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    CVector n5{-s2, s2, -1.0 / s3, 1.0 / s3, 0.0};
    CVector v5{-3.0 * s2, 3.0 * s2, -s3, s3, 1.0};
    GeneralizedFamily f5 = generalized_interp_simple(n5, v5, 5);
    double q0 = 0.0;
    for (const auto& b : f5.basis)
        q0 = std::max(q0, std::abs(b[0]));
    bool unsolvable = f5.verdict == OrdinaryVerdict::unsolvable && !f5.basis.empty() && q0 <= 1e-10;
    ok = ok && unsolvable;
    detail += fmt("five-node verdict %s, max |Q(0)| over basis %.1e; ", to_string(f5.verdict), q0);

    for (std::size_t m : {1u, 2u})
    {
        CounterexampleReport rep = counterexample_2n_alternance(m);
        ok = ok && rep.achieved && rep.zeros.size() == 2 * rep.n - 2;
        detail += fmt("n=%zu zeros %zu; ", rep.n, rep.zeros.size());
    }
    double lam = nonuniqueness_lambda_star();
    ok = ok && lam >= 1.60 && lam <= 1.65;
    detail += fmt("lambda* %.6f", lam);
    return {10, "worked_examples", ok, detail};
}

// 11
AcceptanceResult hsum_operators(Rng&)
{
    const Complex z(0.6, 0.2);
    double diff_err = 0.0, int_err = 0.0;
    for (std::size_t n = 1; n <= 12; ++n)
    {
        CVector dn = diff_nodes(n), in = int_nodes(n);
        for (std::size_t j = 0; j < n; ++j)
        {
            CVector c(j + 1, 0.0);
            c[j] = 1.0;
            PowerSeries h(c);
            Complex lhs = static_cast<double>(j) * ipow(z, j);
            diff_err = std::max(diff_err, std::abs(lhs - (-h.eval(z) + HSum{dn, h}(z))));
            Complex integral = ipow(z, j + 1) / static_cast<double>(j + 1);
            int_err = std::max(int_err, std::abs(integral - z * HSum{in, h}(z)));
        }
    }
    bool bound_ok = true;
    double sum_res = 0.0;
    for (double a : {1.5, 2.0, 3.0})
        for (std::size_t n = 1; n <= 20; ++n)
        {
            CVector f = extrap_freqs(a, n);
            double mx = 0.0;
            for (Complex l : f)
                mx = std::max(mx, std::abs(l));
            bound_ok = bound_ok && mx <= extrap_freq_bound(a, n) * (1.0 + 1e-12);
            CVector s = power_sums(f, n);
            for (std::size_t m = 0; m < n; ++m)
            {
                double target = std::pow(a, static_cast<double>(m));
                sum_res = std::max(sum_res, std::abs(s[m] - target) / target);
            }
        }
    double rem_err = 0.0;
    const Complex w(0.5, -0.3);
    for (double a : {1.5, 2.0, 3.0})
        for (std::size_t n : {2u, 3u, 4u})
            for (std::size_t mu : {1u, 2u, 3u})
                for (std::size_t m = 0; m < 2 * n + 2; ++m)
                {
                    CVector c(m + 1, 0.0);
                    c[m] = 1.0;
                    PowerSeries h(c);
                    Complex rem = h.eval(w) - extrapolate(h, a, n, mu, w);
                    Complex expected = extrapolation_remainder_factor(a, n, mu, m) * ipow(w, m);
                    rem_err = std::max(rem_err, std::abs(rem - expected));
                }
    bool ok = diff_err <= 1e-10 && int_err <= 1e-10 && bound_ok && sum_res <= 1e-9 && rem_err <= 1e-9;
    return {11, "hsum_operators", ok,
            fmt("diff exactness %.3e, int exactness %.3e, frequency bound %s, power-sum residual %.3e, remainder "
                "identity %.3e",
                diff_err, int_err, bound_ok ? "holds" : "VIOLATED", sum_res, rem_err)};
}

// 12
AcceptanceResult prony_recovery(Rng& rng)
{
    double worst = 0.0, worst_moment = 0.0;
    std::size_t irregular = 0;
    for (int t = 0; t < 80; ++t)
    {
        std::size_t n = 1 + static_cast<std::size_t>(t % 8);
        CVector freqs(n), amps(n);
        double base = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        for (std::size_t k = 0; k < n; ++k)
        {
            double angle = base + 2.0 * std::numbers::pi * (static_cast<double>(k) + uniform(rng, -0.25, 0.25)) /
                                      static_cast<double>(n);
            freqs[k] = std::polar(uniform(rng, 0.6, 1.0), angle);
            amps[k] = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
        }
        CVector s(2 * n);
        for (std::size_t m = 0; m < 2 * n; ++m)
            for (std::size_t k = 0; k < n; ++k)
                s[m] += amps[k] * ipow(freqs[k], m);
        PronySolution sol = prony_solve(s);
        if (!sol.regular)
        {
            ++irregular;
            continue;
        }
        worst = std::max(worst, match_error(freqs, amps, sol.freqs, sol.amps));
        worst_moment = std::max(worst_moment, sol.moment_residual);
    }

    // Golub-Welsch: Jacobi matrix with off-diagonal k / sqrt(4k^2 - 1).
    double gauss2_err = 0.0, gauss_err = 0.0;
    for (std::size_t n = 2; n <= 6; ++n)
    {
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t k = 1; k < n; ++k)
        {
            double kd = static_cast<double>(k);
            double beta = kd / std::sqrt(4.0 * kd * kd - 1.0);
            jac(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = beta;
            jac(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k)) = beta;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
        AFSum g = gauss_quadrature(PowerSeries{1.0}, n);
        for (std::size_t k = 0; k < n; ++k)
        {
            auto i = static_cast<Eigen::Index>(k);
            double node = es.eigenvalues()(i);
            double weight = 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
            double e = std::max(std::abs(g.freqs[k] - node), std::abs(g.amps[k] - weight));
            (n == 2 ? gauss2_err : gauss_err) = std::max(n == 2 ? gauss2_err : gauss_err, e);
        }
    }
    bool ok = irregular == 0 && worst <= 1e-7 && worst_moment <= 1e-8 && gauss2_err <= 1e-10 && gauss_err <= 1e-8;
    return {12, "prony_recovery", ok,
            fmt("irregular %zu/80, max parameter error %.3e, max moment residual %.3e, Gauss vs Jacobi "
                "oracle n=2 %.3e, n=3..6 %.3e",
                irregular, worst, worst_moment, gauss2_err, gauss_err)};
}

// 13
AcceptanceResult regularized_operators(Rng& rng)
{
    const Complex z(0.7, 0.1);
    double diff_err = 0.0, extrap_err = 0.0, gap = 0.0;
    bool bound_ok = true;
    for (std::size_t n : {3u, 4u, 5u})
        for (double p : {1.0, 0.5, -0.7})
        {
            RegDiffResult r = reg_diff(n, p);
            gap = std::max(gap, r.closed_form_gap);
            for (int t = 0; t < 4; ++t)
            {
                PowerSeries h = PowerSeries::generate(2 * n, [&](std::size_t) { return point_in_disk(rng, 1.0); });
                Complex exact = 0.0;
                for (std::size_t m = 1; m < 2 * n; ++m)
                    exact += static_cast<double>(m) * h.at(m) * ipow(z, m);
                diff_err = std::max(diff_err, std::abs(reg_diff_apply(r, h, z) - exact));
            }
        }
    for (std::size_t n : {2u, 3u, 4u})
        for (double a : {0.5, 1.5, 2.0})
            for (double p : {0.1, 1.0, 4.0})
            {
                RegExtrapResult r = reg_extrap(a, n, p);
                bound_ok = bound_ok && r.bound_holds && r.distinct && r.prony.regular;
                for (int t = 0; t < 4; ++t)
                {
                    PowerSeries h =
                        PowerSeries::generate(2 * n, [&](std::size_t) { return point_in_disk(rng, 1.0); });
                    extrap_err = std::max(extrap_err, std::abs(reg_extrap_apply(r, h, z) - h.eval(a * z)));
                }
            }
    bool ok = diff_err <= 1e-8 && extrap_err <= 1e-8 && bound_ok && gap <= 1e-8;
    return {13, "regularized_operators", ok,
            fmt("differentiation exactness %.3e, extrapolation exactness %.3e, frequency bound %s, closed-form gap "
                "%.3e",
                diff_err, extrap_err, bound_ok ? "strict" : "VIOLATED", gap)};
}

// 14
AcceptanceResult borchardt(Rng& rng)
{
    double worst = 0.0;
    for (std::size_t n = 1; n <= 7; ++n)
        for (int t = 0; t < 20; ++t)
        {
            // All 2n points distinct with pairwise distance at least 0.25.
            CVector pts;
            while (pts.size() < 2 * n)
            {
                Complex c = point_in_disk(rng, 2.0);
                bool far = true;
                for (Complex q : pts)
                    far = far && std::abs(c - q) >= 0.25;
                if (far)
                    pts.push_back(c);
            }
            CVector xi(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n));
            CVector z(pts.begin() + static_cast<std::ptrdiff_t>(n), pts.end());
            worst = std::max(worst, borchardt_check(xi, z).identity_error);
        }
    return {14, "borchardt_identity", worst <= 1e-8, fmt("max relative error %.3e", worst)};
}

using Runner = AcceptanceResult (*)(Rng&);

constexpr const char* titles[acceptance_count] = {
    "pade_contact",        "pade_error_bound",    "constant_chebyshev_nodes",
    "remez_constants",     "extremal_weighted_norm", "quadrature_identity",
    "metric_inequalities", "first_order_derivative_equality", "ode_tower_identity",
    "worked_examples",     "hsum_operators",      "prony_recovery",
    "regularized_operators", "borchardt_identity",
};

constexpr Runner runners[acceptance_count] = {
    pade_contact,       pade_error_bound_check, constant_chebyshev,  remez_constants,     extremal_norm,
    quadrature_identity, inequalities,          first_order_equality, ode_identity,       worked_examples,
    hsum_operators,     prony_recovery,         regularized_operators, borchardt,
};

} // namespace

AcceptanceResult run_acceptance(int id, std::uint64_t seed)
{
    require(id >= 1 && id <= acceptance_count, ErrorKind::precondition,
            "acceptance criterion id must be in 1..14");
    Rng rng(seed + static_cast<std::uint64_t>(id));
    auto t0 = std::chrono::steady_clock::now();
    AcceptanceResult r;
    try
    {
        r = runners[id - 1](rng);
    }
    catch (const Error& e)
    {
        r = {id, titles[id - 1], false, std::string("error (") + to_string(e.kind()) + "): " + e.what()};
    }
    r.id = id;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<AcceptanceResult> run_acceptance_all(std::uint64_t seed)
{
    std::vector<AcceptanceResult> out;
    for (int id = 1; id <= acceptance_count; ++id)
        out.push_back(run_acceptance(id, seed));
    return out;
}

} // namespace spfkit
