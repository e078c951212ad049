#include "spfkit/hsum.hpp"

#include <cmath>
#include <limits>

#include "spfkit/error.hpp"

namespace spfkit
{

namespace
{

double coefficient_gap(const ComplexPolynomial& a, const ComplexPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return std::numeric_limits<double>::infinity();
    ComplexPolynomial am = a.monic();
    ComplexPolynomial bm = b.monic();
    std::size_t len = std::max(am.coeffs().size(), bm.coeffs().size());
    double gap = 0.0;
    for (std::size_t i = 0; i < len; ++i)
        gap = std::max(gap, std::abs(am[i] - bm[i]));
    return gap;
}

Complex ipow(Complex z, std::size_t k)
{
    Complex r = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        r *= z;
    return r;
}

Complex coeff_or_zero(const PowerSeries& h, std::size_t m)
{
    return m < h.order() ? h.at(m) : Complex{};
}

} // namespace

double reg_diff_q(std::size_t n, double p)
{
    require(n >= 3, ErrorKind::precondition, "reg_diff: n must be at least 3");
    double nd = static_cast<double>(n);
    return -2.0 * p * (3.0 * p + nd * nd - 1.0) / ((nd - 1.0) * (nd - 2.0));
}

ComplexPolynomial reg_diff_generating(std::size_t n, double p)
{
    require(n >= 3, ErrorKind::precondition, "reg_diff: n must be at least 3");
    double nd = static_cast<double>(n);
    double denom = (nd - 1.0) * (nd - 2.0);
    // (lambda^{n-1} - (n-1) lambda + n - 2) / (lambda - 1)^2 is a polynomial.
    ComplexPolynomial num = ComplexPolynomial::monomial(n - 1) - ComplexPolynomial::monomial(1, nd - 1.0) +
                            ComplexPolynomial::constant(nd - 2.0);
    ComplexPolynomial sq{1.0, -2.0, 1.0};
    ComplexPolynomial quotient = divide(num, sq).first;
    return ComplexPolynomial::monomial(n) - ComplexPolynomial::monomial(1, 6.0 / denom) * quotient +
           ComplexPolynomial::constant(2.0 + 6.0 * p / denom);
}

RegDiffResult reg_diff(std::size_t n, double p, const PronyOptions& opts)
{
    require(n >= 3, ErrorKind::precondition, "reg_diff: n must be at least 3");
    for (std::size_t j = 0; j <= 40; ++j)
    {
        double pj = p;
        if (j > 0)
            pj = p == 0.0 ? std::ldexp(1.0, -static_cast<int>(j)) : p * (1.0 + std::ldexp(1.0, -static_cast<int>(j)));
        double q = reg_diff_q(n, pj);
        CVector s(2 * n);
        for (std::size_t m = 0; m < 2 * n; ++m)
            s[m] = static_cast<double>(m);
        s[n - 1] += pj;
        s[2 * n - 1] += q;
        PronySolution sol = prony_solve(s, opts);
        if (!sol.regular)
            continue;
        RegDiffResult out;
        out.n = n;
        out.p_used = pj;
        out.q = q;
        out.perturbations = j;
        out.sum = AFSum{sol.amps, sol.freqs, {}};
        out.closed_form = reg_diff_generating(n, pj);
        out.closed_form_gap = coefficient_gap(sol.generating, out.closed_form);
        out.prony = std::move(sol);
        return out;
    }
    throw Error(ErrorKind::no_regular_solution, "reg_diff: no regular p within 40 perturbations");
}

Complex reg_diff_apply(const RegDiffResult& r, const PowerSeries& h, Complex z)
{
    AFSum sum{r.sum.amps, r.sum.freqs, h};
    std::size_t n = r.n;
    return -r.p_used * coeff_or_zero(h, n - 1) * ipow(z, n - 1) - r.q * coeff_or_zero(h, 2 * n - 1) * ipow(z, 2 * n - 1) +
           sum(z);
}

ComplexPolynomial reg_extrap_generating(double a, std::size_t n, double p)
{
    require(n >= 1, ErrorKind::precondition, "reg_extrap: n must be at least 1");
    double an1 = std::pow(a, static_cast<double>(n - 1));
    double scale = an1 * a / (static_cast<double>(n) * an1 + p);
    // (lambda^n - a^n)/(lambda - a) = sum_{k<n} a^{n-1-k} lambda^k.
    CVector c(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = -scale * std::pow(a, static_cast<double>(n - 1 - k));
    c[n] = 1.0;
    return ComplexPolynomial(std::move(c));
}

RegExtrapResult reg_extrap(double a, std::size_t n, double p, const PronyOptions& opts)
{
    require(a > 0.0, ErrorKind::precondition, "reg_extrap: a must be positive");
    require(p > 0.0, ErrorKind::precondition, "reg_extrap: p must be positive");
    require(n >= 1, ErrorKind::precondition, "reg_extrap: n must be at least 1");
    CVector s(2 * n);
    for (std::size_t m = 0; m < 2 * n; ++m)
        s[m] = std::pow(a, static_cast<double>(m));
    s[n - 1] += p;

    RegExtrapResult out;
    out.n = n;
    out.a = a;
    out.p = p;
    out.prony = prony_solve(s, opts);
    out.sum = AFSum{out.prony.amps, out.prony.freqs, {}};
    out.closed_form = reg_extrap_generating(a, n, p);
    out.closed_form_gap = coefficient_gap(out.prony.generating, out.closed_form);
    double nd = static_cast<double>(n);
    double delta = std::pow(1.0 + p / (nd * std::pow(a, nd - 1.0)), -1.0 / nd);
    out.freq_bound = delta * a;
    for (Complex l : out.prony.freqs)
        out.max_freq = std::max(out.max_freq, std::abs(l));
    out.bound_holds = !out.prony.freqs.empty() && out.max_freq < out.freq_bound;
    out.distinct = out.prony.separation > opts.min_separation;
    return out;
}

Complex reg_extrap_apply(const RegExtrapResult& r, const PowerSeries& h, Complex z)
{
    AFSum sum{r.sum.amps, r.sum.freqs, h};
    return -r.p * coeff_or_zero(h, r.n - 1) * ipow(z, r.n - 1) + sum(z);
}

double reg_extrap_remainder_bound(const PowerSeries& h, double a, std::size_t n, Complex z)
{
    double w = std::abs(a * z);
    double total = 0.0;
    for (std::size_t m = 2 * n; m < h.order(); ++m)
        total += std::abs(h.at(m)) * std::pow(w, static_cast<double>(m));
    return total;
}

} // namespace spfkit
