#ifndef SPFKIT_SUP_NORM_HPP
#define SPFKIT_SUP_NORM_HPP

#include <functional>
#include <vector>

namespace spfkit
{

using RealFunction = std::function<double(double)>;

struct SupNormOptions
{
    double tol = 1e-10;
    std::size_t grid_points = 4097;
};

struct SupNormResult
{
    double value = 0.0;
    double argmax = 0.0;
};

/// Local maximum of |g| after refinement; `value` keeps the sign of g.
struct Extremum
{
    double x;
    double value;
};

///
/// All local maxima of |g| on [a, b]: a Chebyshev grid scan followed by a
/// Brent refinement inside the bracketing grid cells. Endpoints count when
/// |g| is locally maximal there. Throws Error(pole_on_interval) on a
/// non-finite sample.
///
std::vector<Extremum> local_extrema(const RealFunction& g, double a, double b,
                                    const SupNormOptions& opts = {});

/// max_{[a,b]} |g| and a point where it is attained.
SupNormResult sup_norm(const RealFunction& g, double a, double b,
                       const SupNormOptions& opts = {});

/// Chebyshev-Lobatto points of [a, b] in increasing order.
std::vector<double> chebyshev_grid(double a, double b, std::size_t count);

} // namespace spfkit

#endif
