#include "spfkit/hsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spfkit/error.hpp"
#include "spfkit/linalg.hpp"

namespace spfkit
{

PronySolution prony_solve(std::span<const Complex> s, const PronyOptions& opts)
{
    require(s.size() >= 2 && s.size() % 2 == 0, ErrorKind::precondition,
            "prony_solve: need 2n moments with n >= 1");
    const auto n = static_cast<Eigen::Index>(s.size() / 2);
    PronySolution out;
    out.moments.assign(s.begin(), s.end());

    ComplexMatrix hankel(n, n);
    ComplexVector rhs(n);
    for (Eigen::Index m = 0; m < n; ++m)
    {
        for (Eigen::Index i = 0; i < n; ++i)
            hankel(m, i) = s[static_cast<std::size_t>(m + i)];
        rhs(m) = -s[static_cast<std::size_t>(m + n)];
    }
    Eigen::FullPivLU<ComplexMatrix> lu(hankel);
    out.hankel_rcond = lu.rcond();
    if (!lu.isInvertible() || !(out.hankel_rcond * opts.max_condition > 1.0))
    {
        out.diagnostics = "singular Hankel system (rcond " + std::to_string(out.hankel_rcond) + ")";
        return out;
    }
    ComplexVector g = lu.solve(rhs);
    CVector coeffs(static_cast<std::size_t>(n) + 1);
    for (Eigen::Index i = 0; i < n; ++i)
        coeffs[static_cast<std::size_t>(i)] = g(i);
    coeffs.back() = 1.0;
    out.generating = ComplexPolynomial(std::move(coeffs));

    RootSet rs = find_roots(out.generating, opts.roots);
    if (!rs.converged)
    {
        out.diagnostics = "root finder did not converge";
        return out;
    }
    out.freqs = rs.roots;

    double max_abs = 0.0;
    for (Complex l : out.freqs)
        max_abs = std::max(max_abs, std::abs(l));
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < out.freqs.size(); ++j)
        for (std::size_t k = j + 1; k < out.freqs.size(); ++k)
            min_dist = std::min(min_dist, std::abs(out.freqs[j] - out.freqs[k]));
    out.separation = max_abs > 0.0 ? min_dist / max_abs
                                   : (out.freqs.size() > 1 ? 0.0 : std::numeric_limits<double>::infinity());

    ComplexMatrix vander(n, n);
    ComplexVector head(n);
    for (Eigen::Index k = 0; k < n; ++k)
    {
        Complex pw = 1.0;
        for (Eigen::Index m = 0; m < n; ++m, pw *= out.freqs[static_cast<std::size_t>(k)])
            vander(m, k) = pw;
    }
    for (Eigen::Index m = 0; m < n; ++m)
        head(m) = s[static_cast<std::size_t>(m)];
    ComplexVector mu = Eigen::FullPivLU<ComplexMatrix>(vander).solve(head);
    out.amps = to_cvector(mu);

    double max_amp = 0.0;
    for (Complex a : out.amps)
        max_amp = std::max(max_amp, std::abs(a));
    bool amps_nonzero = max_amp > 0.0;
    for (Complex a : out.amps)
        amps_nonzero = amps_nonzero && std::abs(a) > opts.zero_amplitude * max_amp;

    for (std::size_t m = 0; m < s.size(); ++m)
    {
        Complex fwd = 0.0;
        for (std::size_t k = 0; k < out.freqs.size(); ++k)
        {
            Complex pw = 1.0;
            for (std::size_t e = 0; e < m; ++e)
                pw *= out.freqs[k];
            fwd += out.amps[k] * pw;
        }
        out.moment_residual =
            std::max(out.moment_residual, std::abs(fwd - s[m]) / std::max(1.0, std::abs(s[m])));
    }

    bool separated = out.separation > opts.min_separation;
    out.regular = separated && amps_nonzero && out.generating.degree() == n;
    if (!separated)
        out.diagnostics = "frequencies collide (separation " + std::to_string(out.separation) + ")";
    else if (!amps_nonzero)
        out.diagnostics = "zero amplitude";
    return out;
}

CVector gauss_moments(std::size_t n)
{
    CVector s(2 * n);
    for (std::size_t m = 0; m < 2 * n; ++m)
        s[m] = m % 2 == 0 ? 2.0 / static_cast<double>(m + 1) : 0.0;
    return s;
}

AFSum gauss_quadrature(const PowerSeries& h, std::size_t n, const PronyOptions& opts)
{
    require(n >= 1, ErrorKind::precondition, "gauss_quadrature: n must be at least 1");
    PronySolution sol = prony_solve(gauss_moments(n), opts);
    require(sol.regular, ErrorKind::degenerate, "gauss_quadrature: irregular moment system: " + sol.diagnostics);
    // Nodes are real; sort ascending and drop round-off imaginary parts.
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k)
        order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return sol.freqs[x].real() < sol.freqs[y].real(); });
    AFSum out{CVector(n), CVector(n), h};
    for (std::size_t k = 0; k < n; ++k)
    {
        out.freqs[k] = sol.freqs[order[k]].real();
        out.amps[k] = sol.amps[order[k]].real();
    }
    return out;
}

} // namespace spfkit
