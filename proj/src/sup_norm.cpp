#include "spfkit/sup_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/minima.hpp>

#include "spfkit/error.hpp"

namespace spfkit
{

std::vector<double> chebyshev_grid(double a, double b, std::size_t count)
{
    require(count >= 2, ErrorKind::precondition, "chebyshev_grid: need >= 2 points");
    std::vector<double> x(count);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double step = std::numbers::pi / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        x[i] = mid - half * std::cos(step * static_cast<double>(i));
    x.front() = a;
    x.back() = b;
    return x;
}

std::vector<Extremum> local_extrema(const RealFunction& g, double a, double b,
                                    const SupNormOptions& opts)
{
    require(a < b, ErrorKind::precondition, "local_extrema: need a < b");
    const std::vector<double> x = chebyshev_grid(a, b, opts.grid_points);
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        v[i] = g(x[i]);
        if (!std::isfinite(v[i]))
            throw Error(ErrorKind::pole_on_interval,
                        "non-finite sample at x = " + std::to_string(x[i]));
    }

    const int bits = std::numeric_limits<double>::digits / 2;
    const auto neg_abs = [&g](double t) { return -std::abs(g(t)); };

    std::vector<Extremum> out;
    const std::size_t last = x.size() - 1;
    for (std::size_t i = 0; i <= last; ++i)
    {
        const double here = std::abs(v[i]);
        const bool left_ok = (i == 0) || here > std::abs(v[i - 1]);
        const bool right_ok = (i == last) || here >= std::abs(v[i + 1]);
        if (!left_ok || !right_ok)
            continue;

        Extremum best{x[i], v[i]};
        const double lo = x[i == 0 ? 0 : i - 1];
        const double hi = x[i == last ? last : i + 1];
        auto [xr, fr] = boost::math::tools::brent_find_minima(neg_abs, lo, hi, bits);
        if (-fr > std::abs(best.value))
        {
            const double gv = g(xr);
            if (!std::isfinite(gv))
                throw Error(ErrorKind::pole_on_interval,
                            "non-finite sample at x = " + std::to_string(xr));
            best = {xr, gv};
        }
        if (!out.empty() && std::abs(out.back().x - best.x) <= 1e-12 * (1 + std::abs(best.x)))
        {
            if (std::abs(best.value) > std::abs(out.back().value))
                out.back() = best;
            continue;
        }
        out.push_back(best);
    }
    return out;
}

SupNormResult sup_norm(const RealFunction& g, double a, double b,
                       const SupNormOptions& opts)
{
    const std::vector<Extremum> ext = local_extrema(g, a, b, opts);
    SupNormResult r{0.0, a};
    for (const Extremum& e : ext)
        if (std::abs(e.value) > r.value)
            r = {std::abs(e.value), e.x};
    return r;
}

} // namespace spfkit
