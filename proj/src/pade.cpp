#include <cmath>

#include "spfkit/error.hpp"
#include "spfkit/interp.hpp"

namespace spfkit
{

SimpleFraction pade_spf(const PowerSeries& f, std::size_t n, const PadeOptions& opts)
{
    require(n >= 1, ErrorKind::precondition, "pade_spf: n must be >= 1");
    require(f.order() >= n, ErrorKind::precondition,
            "pade_spf: series order must be >= n");
    CVector s(n);
    for (std::size_t m = 1; m <= n; ++m)
        s[m - 1] = -f[m - 1];
    const ComplexPolynomial t = poly_from_power_sums(s);
    RootSet rs = find_roots(t, opts.roots);
    if (!rs.converged)
        throw Error(ErrorKind::root_finder, "pade_spf: root finder did not converge");
    CVector poles;
    for (const Complex& lambda : rs.roots)
        if (std::abs(lambda) > opts.zero_tol)
            poles.push_back(1.0 / lambda);
    return SimpleFraction(std::move(poles));
}

SimpleFraction pade_spf_exp(const PowerSeries& f, std::size_t n, const PadeOptions& opts)
{
    require(n >= 1, ErrorKind::precondition, "pade_spf_exp: n must be >= 1");
    require(f.order() >= n, ErrorKind::precondition,
            "pade_spf_exp: series order must be >= n");
    const PowerSeries e = series_exp(series_integrate(f.truncated(n)));
    ComplexPolynomial q = e.truncated(n + 1).to_polynomial();
    require(!q.is_zero() && q.max_abs_coeff() > 0, ErrorKind::degenerate,
            "pade_spf_exp: partial sum of exp(int f) is zero");
    // Leading coefficients at rounding level stand for poles at infinity.
    q = q.trimmed(opts.zero_tol);
    if (q.degree() <= 0)
        return SimpleFraction{};
    return from_polynomial(q, opts.roots);
}

CVector maclaurin_coefficients(const SimpleFraction& spf, std::size_t count)
{
    CVector out(count);
    for (const Complex& z : spf.poles())
    {
        const Complex lambda = 1.0 / z;
        Complex pw = lambda;
        for (std::size_t m = 0; m < count; ++m, pw *= lambda)
            out[m] -= pw;
    }
    return out;
}

Complex pade_remainder(const PowerSeries& f, const SimpleFraction& spf, std::size_t n,
                       Complex z)
{
    // Q normalized as prod (1 - z/z_k): same ratio as the monic form and
    // harmless for poles far from the origin.
    CVector lambdas;
    for (const Complex& p : spf.poles())
        lambdas.push_back(1.0 / p);
    ComplexPolynomial q{1.0};
    for (const Complex& l : lambdas)
        q = q * ComplexPolynomial{1.0, -l};
    const Complex qz = q(z);
    require(std::abs(qz) > 0, ErrorKind::pole_evaluation, "pade_remainder: Q(z) = 0");

    const std::size_t big_m = f.order();
    const int nu = std::max(q.degree(), 0);
    Complex sum{};
    Complex zk = 1.0;
    for (std::size_t k = 0; k < n; ++k)
        zk *= z;
    for (std::size_t k = n; k < big_m; ++k, zk *= z)
    {
        Complex inner{};
        for (int m = 0; m <= nu && static_cast<std::size_t>(m) <= k; ++m)
            inner += q[static_cast<std::size_t>(m)] * f[k - static_cast<std::size_t>(m)];
        sum += zk * inner;
    }
    return sum / qz;
}

double pade_epsilon(std::size_t n)
{
    const double p = static_cast<double>(n) + 1.0;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (mid * mid - std::pow(1.0 - mid, p) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double pade_error_bound(double a, std::size_t n, Complex z, double r)
{
    require(a > 0, ErrorKind::domain, "pade_error_bound: a must be > 0");
    require(n >= 1, ErrorKind::domain, "pade_error_bound: n must be >= 1");
    const double eps = pade_epsilon(n);
    const double az = std::abs(z);
    require(az < r, ErrorKind::domain, "pade_error_bound: need |z| < r");
    require(r < (1.0 - eps) / a, ErrorKind::domain,
            "pade_error_bound: need r < (1 - eps_n)/a");
    const double nn = static_cast<double>(n);
    return a / (1.0 - a * az) * std::pow(az / r, nn) *
           std::pow((1.0 - eps + a * r) / (1.0 - eps - a * r), nn) *
           std::log(std::exp(1.0) * r / (r - az));
}

bool frequency_bound_check(std::span<const Complex> s, double a)
{
    require(!s.empty(), ErrorKind::precondition, "frequency_bound_check: empty power sums");
    require(a > 0, ErrorKind::precondition, "frequency_bound_check: a must be > 0");
    const ComplexPolynomial t = poly_from_power_sums(s);
    const double limit = a / (1.0 - pade_epsilon(s.size()));
    const RootSet rs = find_roots(t);
    for (const Complex& l : rs.roots)
        if (!(std::abs(l) < limit))
            return false;
    return true;
}

} // namespace spfkit
