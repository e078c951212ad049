#include "spfkit/hsum.hpp"

#include <cmath>

#include "spfkit/error.hpp"

namespace spfkit
{

namespace
{

// Replaces a cluster of multiplicity m by one point where p, ..., p^{(m-1)}
// vanish, found by Newton on p^{(m-1)} from the cluster mean.
Complex polish_cluster(const ComplexPolynomial& p, Complex center, std::size_t m)
{
    ComplexPolynomial d = p.derivative(static_cast<unsigned>(m - 1));
    ComplexPolynomial dd = d.derivative();
    Complex x = center;
    for (int it = 0; it < 50; ++it)
    {
        Complex slope = dd(x);
        if (slope == Complex{})
            break;
        Complex step = d(x) / slope;
        x -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x)))
            break;
    }
    return x;
}

CVector roots_of(const ComplexPolynomial& p, const RootOptions& opts)
{
    if (p.degree() <= 0)
        return {};
    RootSet rs = find_roots(p, opts);
    require(rs.converged, ErrorKind::root_finder, "root finder did not converge");
    if (rs.clusters.size() == rs.roots.size())
        return rs.roots;
    const double scale = p.max_abs_coeff();
    const double radius = std::sqrt(opts.tol);
    CVector out;
    for (const RootCluster& c : rs.clusters)
    {
        Complex x = c.multiplicity > 1 ? polish_cluster(p, c.center, c.multiplicity) : c.center;
        bool multiple = c.multiplicity > 1 && std::abs(x - c.center) <= radius;
        for (unsigned k = 0; multiple && k + 1 < c.multiplicity; ++k)
            multiple = std::abs(p.derivative(k)(x)) <= 1e3 * opts.tol * scale * std::pow(1.0 + std::abs(x), p.degree());
        if (multiple)
        {
            out.insert(out.end(), c.multiplicity, x);
            continue;
        }
        for (Complex r : rs.roots)
            if (std::abs(r - c.center) <= radius)
                out.push_back(r);
    }
    return out.size() == rs.roots.size() ? out : rs.roots;
}

CVector nodes_from_power_sums(const CVector& sums)
{
    return roots_of(poly_from_power_sums(sums), {});
}

Complex ipow(Complex z, std::size_t k)
{
    Complex r = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        r *= z;
    return r;
}

} // namespace

Complex HSum::operator()(Complex z) const
{
    Complex sum = 0.0;
    for (Complex l : freqs)
        sum += l * base.eval(l * z);
    return sum;
}

CVector HSum::coefficients(std::size_t count) const
{
    std::size_t m_max = std::min(count, base.order());
    CVector s = power_sums(freqs, m_max);
    CVector out(m_max);
    for (std::size_t m = 0; m < m_max; ++m)
        out[m] = base.at(m) * s[m];
    return out;
}

Complex AFSum::operator()(Complex z) const
{
    Complex sum = 0.0;
    for (std::size_t k = 0; k < freqs.size(); ++k)
        sum += amps[k] * base.eval(freqs[k] * z);
    return sum;
}

CVector AFSum::coefficients(std::size_t count) const
{
    std::size_t m_max = std::min(count, base.order());
    CVector out(m_max);
    for (std::size_t m = 0; m < m_max; ++m)
    {
        Complex moment = 0.0;
        for (std::size_t k = 0; k < freqs.size(); ++k)
            moment += amps[k] * ipow(freqs[k], m);
        out[m] = base.at(m) * moment;
    }
    return out;
}

HSum hsum_pade(const PowerSeries& f, const PowerSeries& h, std::size_t n, const RootOptions& opts)
{
    require(n >= 1, ErrorKind::precondition, "hsum_pade: n must be at least 1");
    require(f.order() >= n && h.order() >= n, ErrorKind::precondition,
            "hsum_pade: f and h must be known to order n");
    CVector sums(n);
    for (std::size_t m = 0; m < n; ++m)
    {
        if (f.at(m) == Complex{})
            continue;
        require(h.at(m) != Complex{}, ErrorKind::precondition,
                "hsum_pade: moment s_" + std::to_string(m) + " undefined (h_m = 0, f_m != 0)");
        sums[m] = f.at(m) / h.at(m);
    }
    return HSum{roots_of(poly_from_power_sums(sums), opts), h};
}

ComplexPolynomial literal_node_polynomial(int kind, std::size_t n)
{
    require(kind == 1 || kind == 2, ErrorKind::precondition, "literal_node_polynomial: kind is 1 or 2");
    std::vector<double> v(n + 1, 0.0);
    if (n >= 1)
        v[1] = -1.0;
    for (std::size_t k = 2; k <= n; ++k)
    {
        double kd = static_cast<double>(k);
        double acc = kind == 1 ? 1.0 : 1.0 / (kd * kd);
        for (std::size_t j = 1; j < k; ++j)
        {
            double jd = static_cast<double>(j);
            acc += kind == 1 ? (1.0 - jd / kd) * v[j] : v[j] / (kd * (kd - jd));
        }
        v[k] = acc;
    }
    ComplexPolynomial p = ComplexPolynomial::constant(1.0);
    ComplexPolynomial lambda = ComplexPolynomial::monomial(1);
    for (std::size_t k = 1; k <= n; ++k)
        p = lambda * p - ComplexPolynomial::constant(v[k]);
    return p;
}

CVector diff_nodes(std::size_t n, bool literal)
{
    require(n >= 1, ErrorKind::precondition, "diff_nodes: n must be at least 1");
    if (literal)
        return roots_of(literal_node_polynomial(1, n), {});
    CVector sums(n);
    for (std::size_t j = 1; j <= n; ++j)
        sums[j - 1] = static_cast<double>(j);
    return nodes_from_power_sums(sums);
}

CVector int_nodes(std::size_t n, bool literal)
{
    require(n >= 1, ErrorKind::precondition, "int_nodes: n must be at least 1");
    if (literal)
        return roots_of(literal_node_polynomial(2, n), {});
    CVector sums(n);
    for (std::size_t j = 1; j <= n; ++j)
        sums[j - 1] = 1.0 / static_cast<double>(j);
    return nodes_from_power_sums(sums);
}

CVector extrap_freqs(double a, std::size_t n)
{
    require(a > 1.0, ErrorKind::precondition, "extrap_freqs: a must exceed 1");
    require(n >= 1, ErrorKind::precondition, "extrap_freqs: n must be at least 1");
    CVector sums(n);
    double am = 1.0;
    for (std::size_t m = 0; m < n; ++m, am *= a)
        sums[m] = am;
    return nodes_from_power_sums(sums);
}

double extrap_freq_bound(double a, std::size_t n)
{
    return a - (a - 1.0) / static_cast<double>(n);
}

Complex extrapolate(const PowerSeries& h, double a, std::size_t n, std::size_t mu, Complex z)
{
    require(mu >= 1, ErrorKind::precondition, "extrapolate: mu must be at least 1");
    double tuples = std::pow(static_cast<double>(n), static_cast<double>(mu));
    require(tuples <= static_cast<double>(max_extrapolation_tuples), ErrorKind::size_limit,
            "extrapolate: n^mu exceeds 1e6 tuples");
    CVector freqs = extrap_freqs(a, n);
    Complex w = z / std::pow(a, static_cast<double>(mu));

    // Odometer over the mu-tuple; products are rebuilt from the changed digit.
    std::vector<std::size_t> idx(mu, 0);
    CVector prefix(mu + 1, 1.0);
    for (std::size_t d = 0; d < mu; ++d)
        prefix[d + 1] = prefix[d] * freqs[0];
    Complex sum = 0.0;
    while (true)
    {
        Complex lam = prefix[mu];
        sum += lam * h.eval(lam * w);
        std::size_t d = mu;
        while (d > 0 && idx[d - 1] + 1 == n)
            --d;
        if (d == 0)
            break;
        ++idx[d - 1];
        for (std::size_t e = d; e < mu; ++e)
            idx[e] = 0;
        for (std::size_t e = d - 1; e < mu; ++e)
            prefix[e + 1] = prefix[e] * freqs[idx[e]];
    }
    return sum;
}

Complex extrapolation_remainder_factor(double a, std::size_t n, std::size_t mu, std::size_t m)
{
    CVector freqs = extrap_freqs(a, n);
    Complex s = power_sums(freqs, m + 1)[m];
    Complex ratio = s / std::pow(a, static_cast<double>(m));
    return 1.0 - ipow(ratio, mu);
}

} // namespace spfkit
