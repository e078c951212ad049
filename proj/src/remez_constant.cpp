#include <algorithm>
#include <cmath>

#include <boost/math/tools/minima.hpp>

#include "spfkit/best.hpp"
#include "spfkit/error.hpp"
#include "spfkit/interp.hpp"

namespace spfkit
{

namespace
{

constexpr double min_step = 1e-14;
constexpr std::size_t scan_points = 16;

struct Norms
{
    std::vector<double> values;
    double max = 0.0;
    double spread = 0.0;
};

double interval_sup(double c, std::span<const double> nodes, double lo, double hi)
{
    const auto abs_e = [&](double x) { return std::abs(constant_residual(c, nodes, x)); };
    double best_x = lo, best = abs_e(lo);
    const double hv = abs_e(hi);
    if (hv > best)
    {
        best = hv;
        best_x = hi;
    }
    const double step = (hi - lo) / static_cast<double>(scan_points);
    for (std::size_t i = 1; i < scan_points; ++i)
    {
        const double x = lo + step * static_cast<double>(i);
        const double v = abs_e(x);
        if (v > best)
        {
            best = v;
            best_x = x;
        }
    }
    const double a = std::max(lo, best_x - step);
    const double b = std::min(hi, best_x + step);
    const auto neg = [&](double x) { return -abs_e(x); };
    const auto [xr, fr] = boost::math::tools::brent_find_minima(
        neg, a, b, std::numeric_limits<double>::digits / 2);
    (void)xr;
    return std::max(best, -fr);
}

Norms interval_norms(double c, std::span<const double> nodes)
{
    Norms out;
    const std::size_t n = nodes.size();
    out.values.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
    {
        const double lo = k == 0 ? -1.0 : nodes[k - 1];
        const double hi = k == n ? 1.0 : nodes[k];
        out.values[k] = interval_sup(c, nodes, lo, hi);
    }
    const auto [mn, mx] = std::minmax_element(out.values.begin(), out.values.end());
    out.max = *mx;
    out.spread = *mx > 0 ? (*mx - *mn) / *mx : 0.0;
    return out;
}

bool admissible(std::span<const double> x)
{
    if (x.empty())
        return true;
    if (!(x.front() > -1.0) || !(x.back() < 1.0))
        return false;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            return false;
    return true;
}

double min_gap(std::span<const double> x)
{
    double g = std::min(x.front() + 1.0, 1.0 - x.back());
    for (std::size_t i = 1; i < x.size(); ++i)
        g = std::min(g, x[i] - x[i - 1]);
    return g;
}

} // namespace

double constant_residual(double c, std::span<const double> nodes, double x)
{
    // Taylor coefficients of Pi at x: Pi(x + t) = prod ((x - xi_j) + t).
    std::vector<double> t(nodes.size() + 1, 0.0);
    t[0] = 1.0;
    std::size_t len = 1;
    for (double xi : nodes)
    {
        const double d = x - xi;
        t[len] = 0.0;
        for (std::size_t k = len; k > 0; --k)
            t[k] = t[k] * d + t[k - 1];
        t[0] *= d;
        ++len;
    }
    // Q(x) = sum_k c^{-k} k! t_k.
    double q = 0.0;
    double scale = 1.0;
    for (std::size_t k = 0; k < len; ++k)
    {
        if (k > 0)
            scale *= static_cast<double>(k) / c;
        q += scale * t[k];
    }
    return -c * t[0] / q;
}

DeviationBounds constant_deviation_bounds(double c, std::size_t n)
{
    const double ac = std::abs(c);
    double fact = 1.0;
    for (std::size_t k = 2; k <= n; ++k)
        fact *= static_cast<double>(k);
    const double common =
        std::pow(ac, static_cast<double>(n + 1)) / (std::ldexp(1.0, static_cast<int>(n) - 1) * fact);
    return {common * std::exp(-2 * ac) / (1 + 2 * ac * std::exp(ac)),
            common * 2 * (1 + ac) * std::exp(2 * ac)};
}

RemezResult remez_constant(double c, std::size_t n, const RemezOptions& opts)
{
    require(c != 0.0 && std::isfinite(c), ErrorKind::precondition,
            "remez_constant: c must be a nonzero real");
    require(n >= 1, ErrorKind::precondition, "remez_constant: n must be >= 1");
    require(opts.tol > 0, ErrorKind::precondition, "remez_constant: tol must be > 0");

    RemezResult res;
    res.c = c;
    res.n = n;
    res.in_guaranteed_regime = std::abs(c) < static_cast<double>(n) / 8.0;
    std::vector<double> x = chebyshev_nodes(n);
    Norms cur = interval_norms(c, x);
    res.history.push_back(cur.max);

    // Node widening: enlarge the interval with the smallest norm.
    double eps = 0.5 * min_gap(x);
    for (std::size_t it = 0; it < opts.widening_iterations && cur.spread > opts.tol; ++it)
    {
        ++res.iterations;
        if (eps < min_step)
            break;
        const auto k = static_cast<std::size_t>(
            std::min_element(cur.values.begin(), cur.values.end()) - cur.values.begin());
        std::vector<double> trial = x;
        if (k == 0)
            trial[0] += eps;
        else if (k == n)
            trial[n - 1] -= eps;
        else
        {
            trial[k - 1] -= eps;
            trial[k] += eps;
        }
        if (!admissible(trial))
        {
            eps /= 2;
            continue;
        }
        Norms next = interval_norms(c, trial);
        if (next.max < cur.max)
        {
            x = std::move(trial);
            cur = std::move(next);
            res.history.push_back(cur.max);
        }
        else
            eps /= 2;
    }

    // Newton equalization of log N_k - log N_{k+1} over the node positions.
    const auto equations = [&](const Norms& nm) {
        Eigen::VectorXd f(static_cast<Eigen::Index>(n));
        for (std::size_t k = 0; k < n; ++k)
            f(static_cast<Eigen::Index>(k)) = std::log(nm.values[k]) - std::log(nm.values[k + 1]);
        return f;
    };
    for (std::size_t it = 0; it < opts.newton_iterations && cur.spread > opts.tol; ++it)
    {
        ++res.iterations;
        const Eigen::VectorXd f0 = equations(cur);
        Eigen::MatrixXd jac(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        const double h = 1e-7 * min_gap(x);
        for (std::size_t i = 0; i < n; ++i)
        {
            std::vector<double> xp = x;
            xp[i] += h;
            jac.col(static_cast<Eigen::Index>(i)) = (equations(interval_norms(c, xp)) - f0) / h;
        }
        const Eigen::VectorXd dx = jac.colPivHouseholderQr().solve(-f0);
        bool accepted = false;
        for (double t = 1.0; t >= 1.0 / 1024; t /= 2)
        {
            std::vector<double> trial = x;
            for (std::size_t i = 0; i < n; ++i)
                trial[i] += t * dx(static_cast<Eigen::Index>(i));
            if (!admissible(trial))
                continue;
            Norms next = interval_norms(c, trial);
            if (next.spread < cur.spread && next.max <= cur.max)
            {
                x = std::move(trial);
                cur = std::move(next);
                res.history.push_back(cur.max);
                accepted = true;
                break;
            }
        }
        if (!accepted)
            break;
    }

    res.nodes = x;
    res.interval_norms = cur.values;
    res.deviation = cur.max;
    res.equalization = cur.spread;
    res.converged = cur.spread <= opts.tol;
    CVector cn(x.begin(), x.end());
    res.q = constant_generating_polynomial(c, cn);
    res.spf = from_polynomial(res.q);
    const std::vector<double> nodes = x;
    res.alternance = alternance_detect(
        [c, nodes](double t) { return constant_residual(c, nodes, t); }, -1.0, 1.0);
    return res;
}

} // namespace spfkit
