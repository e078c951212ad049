#include <algorithm>
#include <cmath>

#include "spfkit/best.hpp"
#include "spfkit/error.hpp"
#include "spfkit/roots.hpp"

namespace spfkit
{

AlternanceReport alternance_detect(const RealFunction& residual, double a, double b, double tol,
                                   const SupNormOptions& opts)
{
    const std::vector<Extremum> ext = local_extrema(residual, a, b, opts);
    AlternanceReport rep;
    for (const Extremum& e : ext)
        rep.deviation = std::max(rep.deviation, std::abs(e.value));
    if (rep.deviation == 0.0)
        return rep;

    const double threshold = (1.0 - tol) * rep.deviation;
    for (const Extremum& e : ext)
    {
        if (std::abs(e.value) < threshold)
            continue;
        if (!rep.residuals.empty() && std::signbit(rep.residuals.back()) == std::signbit(e.value))
        {
            if (std::abs(e.value) > std::abs(rep.residuals.back()))
            {
                rep.points.back() = e.x;
                rep.residuals.back() = e.value;
            }
            continue;
        }
        rep.points.push_back(e.x);
        rep.residuals.push_back(e.value);
    }
    rep.count = rep.points.size();
    double lo = rep.deviation;
    double hi = 0.0;
    for (double r : rep.residuals)
    {
        lo = std::min(lo, std::abs(r));
        hi = std::max(hi, std::abs(r));
    }
    rep.equalization = hi > 0 ? (hi - lo) / hi : 0.0;
    return rep;
}

RealFunction residual_function(const RealFunction& f, const SimpleFraction& spf)
{
    return [f, spf](double x) { return f(x) - eval(spf, Complex(x, 0.0)).real(); };
}

AlternanceReport alternance_detect(const RealFunction& f, const SimpleFraction& spf, double a,
                                   double b, double tol, const SupNormOptions& opts)
{
    return alternance_detect(residual_function(f, spf), a, b, tol, opts);
}

const char* to_string(CriterionVerdict v) noexcept
{
    switch (v)
    {
    case CriterionVerdict::certified_best:
        return "certified-best";
    case CriterionVerdict::not_applicable:
        return "not-applicable";
    case CriterionVerdict::fails:
        return "fails";
    }
    return "unknown";
}

CriterionReport alternance_criterion(const RealFunction& residual, const SimpleFraction& spf,
                                     std::size_t n, double tol)
{
    require(spf.is_real_valued(), ErrorKind::precondition,
            "alternance_criterion: SPF must be real-valued on R");
    CriterionReport rep;
    if (spf.order() != n)
    {
        rep.verdict = CriterionVerdict::not_applicable;
        rep.reason = "order " + std::to_string(spf.order()) + " differs from n = " +
                     std::to_string(n);
        return rep;
    }
    for (const Complex& z : spf.poles())
        if (!(std::abs(z) > 1.0))
        {
            rep.verdict = CriterionVerdict::not_applicable;
            rep.reason = "a pole lies in the closed unit disk";
            return rep;
        }
    rep.alternance = alternance_detect(residual, -1.0, 1.0, tol);
    if (rep.alternance.count >= n + 1)
    {
        rep.verdict = CriterionVerdict::certified_best;
        rep.reason = "alternance of " + std::to_string(rep.alternance.count) + " points";
    }
    else
    {
        rep.verdict = CriterionVerdict::fails;
        rep.reason = "only " + std::to_string(rep.alternance.count) +
                     " alternance points, need " + std::to_string(n + 1);
    }
    return rep;
}

double vallee_poussin_bound(const RealFunction& residual, std::span<const double> points)
{
    require(!points.empty(), ErrorKind::precondition, "vallee_poussin_bound: no points");
    double bound = std::numeric_limits<double>::infinity();
    double prev = 0.0;
    for (std::size_t j = 0; j < points.size(); ++j)
    {
        const double e = residual(points[j]);
        require(e != 0.0, ErrorKind::precondition,
                "vallee_poussin_bound: residual vanishes at a point");
        if (j > 0)
        {
            require(points[j] > points[j - 1], ErrorKind::precondition,
                    "vallee_poussin_bound: points must increase");
            require(std::signbit(e) != std::signbit(prev), ErrorKind::precondition,
                    "vallee_poussin_bound: residual signs do not alternate");
        }
        prev = e;
        bound = std::min(bound, std::abs(e));
    }
    return bound;
}

namespace
{

/// Real zeros in (-1, 1) of P'Q - Q'P where sign changes are confirmed.
std::vector<double> counterexample_zeros(std::size_t m, double eps)
{
    ComplexPolynomial base_p{1.0};
    ComplexPolynomial base_q{1.0};
    for (std::size_t k = 1; k <= m; ++k)
    {
        const double s = std::ldexp(1.0, -static_cast<int>(k));
        base_p = base_p * ComplexPolynomial{s * s, 2 * s, 1.0};
        base_q = base_q * ComplexPolynomial{s * s, -2 * s, 1.0};
    }
    const ComplexPolynomial p = base_p + ComplexPolynomial{eps};
    const ComplexPolynomial q = base_q + ComplexPolynomial{eps};
    const ComplexPolynomial w = (p.derivative() * q - q.derivative() * p).trimmed(1e-15);
    std::vector<double> zeros;
    if (w.degree() < 1)
        return zeros;
    const RootSet rs = find_roots(w);
    const auto sign_at = [&w](double x) { return w(Complex(x, 0.0)).real(); };
    for (const Complex& r : rs.roots)
    {
        if (std::abs(r.imag()) > 1e-7 || !(std::abs(r.real()) < 1.0))
            continue;
        const double x = r.real();
        const double h = 1e-9 * (1 + std::abs(x));
        if (std::signbit(sign_at(x - h)) != std::signbit(sign_at(x + h)))
            zeros.push_back(x);
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

} // namespace

CounterexampleReport counterexample_2n_alternance(std::size_t m, double epsilon, double floor)
{
    require(m >= 1, ErrorKind::precondition, "counterexample: m must be >= 1");
    require(epsilon > 0 && floor > 0, ErrorKind::precondition,
            "counterexample: epsilon and floor must be > 0");
    CounterexampleReport rep;
    rep.m = m;
    rep.n = 2 * m;
    const std::size_t target = 2 * rep.n - 2;
    for (double eps = epsilon; eps >= floor; eps /= 2)
    {
        rep.epsilon = eps;
        rep.zeros = counterexample_zeros(m, eps);
        if (rep.zeros.size() == target)
        {
            rep.achieved = true;
            break;
        }
    }
    return rep;
}

double nonuniqueness_residual(double x, double lambda)
{
    return x + 1.0 - (2.0 * x + lambda) / (x * x + lambda * x + 1.0);
}

double nonuniqueness_lambda_star(double tol)
{
    // min_x e is decreasing in lambda on (1, 2); at lambda = 2 the pole reaches x = -1.
    const auto min_residual = [](double lambda) {
        const RealFunction e = [lambda](double x) { return nonuniqueness_residual(x, lambda); };
        double lo = 0.0;
        for (const Extremum& ex : local_extrema(e, -1.0, 1.0))
            lo = std::min(lo, ex.value);
        return lo;
    };
    double a = 1.0, b = 1.99;
    require(min_residual(a) > -1.0 && min_residual(b) < -1.0, ErrorKind::degenerate,
            "nonuniqueness_lambda_star: bracket does not enclose the root");
    while (b - a > tol)
    {
        const double mid = 0.5 * (a + b);
        if (min_residual(mid) > -1.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

} // namespace spfkit
