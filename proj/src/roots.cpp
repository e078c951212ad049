#include "spfkit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spfkit/error.hpp"

namespace spfkit
{

namespace
{

constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;

struct HornerResult
{
    Complex value;
    Complex derivative;
    double error_bound;
};

HornerResult horner_with_derivative(const CVector& c, Complex z)
{
    Complex p = c.back();
    Complex dp{};
    const double r = std::abs(z);
    double bound = std::abs(p) / 2;
    for (std::size_t i = c.size() - 1; i-- > 0;)
    {
        dp = dp * z + p;
        p = p * z + c[i];
        bound = bound * r + std::abs(p);
    }
    // Running error bound for complex Horner (Higham, ch. 5).
    return {p, dp, 8.0 * unit_roundoff * (2 * bound - std::abs(p))};
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i)
{
    while (parent[i] != i)
        i = parent[i] = parent[parent[i]];
    return i;
}

} // namespace

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double radius)
{
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= radius)
                parent[find_root(parent, i)] = find_root(parent, j);

    std::vector<RootCluster> clusters;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const std::size_t r = find_root(parent, i);
        if (slot[r] == n)
        {
            slot[r] = clusters.size();
            clusters.push_back({Complex{}, 0});
        }
        RootCluster& c = clusters[slot[r]];
        c.center += roots[i];
        ++c.multiplicity;
    }
    for (RootCluster& c : clusters)
        c.center /= static_cast<double>(c.multiplicity);
    return clusters;
}

RootSet find_roots(const ComplexPolynomial& p, const RootOptions& opts)
{
    require(p.degree() >= 1, ErrorKind::precondition,
            "find_roots: polynomial degree must be >= 1");
    require(opts.tol > 0, ErrorKind::precondition, "find_roots: tol must be > 0");

    RootSet out;
    const CVector& a = p.coeffs();
    std::size_t zeros = 0;
    while (a[zeros] == Complex{})
        ++zeros;
    out.roots.assign(zeros, Complex{});

    CVector c(a.begin() + static_cast<std::ptrdiff_t>(zeros), a.end());
    const Complex lead = c.back();
    for (Complex& x : c)
        x /= lead;
    const std::size_t n = c.size() - 1;

    if (n > 0)
    {
        double radius = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            radius = std::max(radius, std::abs(c[i]));
        radius += 1.0;

        CVector z(n);
        for (std::size_t k = 0; k < n; ++k)
        {
            const double angle =
                2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
            z[k] = std::polar(radius, angle);
        }

        std::vector<bool> frozen(n, false);
        std::size_t active = n;
        std::size_t iter = 0;
        for (; iter < opts.max_iterations && active > 0; ++iter)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                if (frozen[i])
                    continue;
                const HornerResult h = horner_with_derivative(c, z[i]);
                if (std::abs(h.value) <= h.error_bound)
                {
                    frozen[i] = true;
                    --active;
                    continue;
                }
                Complex ratio;
                if (h.derivative == Complex{})
                    ratio = Complex(1e-8 * (1 + std::abs(z[i])), 0.0);
                else
                    ratio = h.value / h.derivative;
                Complex sum{};
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i)
                    {
                        const Complex d = z[i] - z[j];
                        if (d != Complex{})
                            sum += 1.0 / d;
                    }
                const Complex w = ratio / (1.0 - ratio * sum);
                z[i] -= w;
                if (std::abs(w) <= 4 * unit_roundoff * std::abs(z[i]))
                {
                    frozen[i] = true;
                    --active;
                }
            }
        }
        out.iterations = iter;
        out.converged = (active == 0);
        out.roots.insert(out.roots.end(), z.begin(), z.end());
    }
    else
    {
        out.converged = true;
    }

    const double scale = p.max_abs_coeff();
    const double deg = static_cast<double>(p.degree());
    for (const Complex& r : out.roots)
    {
        const double res = std::abs(p(r));
        out.residual = std::max(out.residual, res);
        if (!(res <= opts.tol * scale * std::pow(1 + std::abs(r), deg)))
            out.converged = false;
    }
    out.clusters = cluster_roots(out.roots, std::sqrt(opts.tol));
    return out;
}

ComplexPolynomial poly_from_power_sums(std::span<const Complex> s)
{
    require(!s.empty(), ErrorKind::precondition,
            "poly_from_power_sums: need at least one power sum");
    const std::size_t n = s.size();
    // tau_1 = S_1,
    // tau_m = (-1)^{m+1}/m * (S_m + sum_{j=1}^{m-1} (-1)^j S_{m-j} tau_j).
    CVector tau(n + 1);
    tau[0] = 1.0;
    for (std::size_t m = 1; m <= n; ++m)
    {
        Complex acc = s[m - 1];
        for (std::size_t j = 1; j < m; ++j)
        {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            acc += sign * s[m - j - 1] * tau[j];
        }
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        tau[m] = sign * acc / static_cast<double>(m);
    }
    // lambda^n - tau_1 lambda^{n-1} + tau_2 lambda^{n-2} - ... + (-1)^n tau_n
    CVector c(n + 1);
    for (std::size_t m = 0; m <= n; ++m)
        c[n - m] = ((m % 2 == 0) ? 1.0 : -1.0) * tau[m];
    return ComplexPolynomial(std::move(c));
}

CVector power_sums(std::span<const Complex> roots, std::size_t count)
{
    require(count >= 1, ErrorKind::precondition, "power_sums: count must be >= 1");
    CVector s(count);
    for (const Complex r : roots)
    {
        Complex pw = r;
        for (std::size_t m = 0; m < count; ++m, pw *= r)
            s[m] += pw;
    }
    return s;
}

} // namespace spfkit
