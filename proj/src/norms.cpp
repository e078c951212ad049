#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "spfkit/error.hpp"
#include "spfkit/metrics.hpp"

namespace spfkit
{

namespace
{

constexpr double quad_tol = 1e-12;
constexpr unsigned quad_depth = 15;

struct CoreInterval
{
    double center;
    double radius;
};

CoreInterval core_interval(std::span<const Complex> poles)
{
    if (poles.empty())
        return {0.0, 1.0};
    double c = 0.0;
    for (const Complex& z : poles)
        c += z.real();
    c /= static_cast<double>(poles.size());
    double r = 1.0;
    for (const Complex& z : poles)
        r = std::max(r, std::abs(z.real() - c) + 4.0 * std::abs(z.imag()));
    return {c, r};
}

double integrate_segment(const RealFunction& g, double a, double b)
{
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, a, b, quad_depth,
                                                                         quad_tol);
}

double integrate_with_breaks(const RealFunction& g, double a, double b,
                             std::span<const Complex> poles)
{
    std::vector<double> cuts{a, b};
    for (const Complex& z : poles)
        if (z.real() > a && z.real() < b)
            cuts.push_back(z.real());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double total = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i)
        total += integrate_segment(g, cuts[i - 1], cuts[i]);
    return total;
}

void require_off_real_line(const SimpleFraction& spf)
{
    for (const Complex& z : spf.poles())
        require(z.imag() != 0.0, ErrorKind::pole_on_interval,
                "norm on R diverges: pole on the real line");
}

} // namespace

double integrate_real_line(const RealFunction& g, std::span<const Complex> poles)
{
    const CoreInterval ci = core_interval(poles);
    const double a = ci.center - ci.radius;
    const double b = ci.center + ci.radius;
    double total = integrate_with_breaks(g, a, b, poles);
    boost::math::quadrature::exp_sinh<double> tail;
    const double inf = std::numeric_limits<double>::infinity();
    total += tail.integrate([&g, b](double t) { return g(b + t); }, 0.0, inf, quad_tol);
    total += tail.integrate([&g, a](double t) { return g(a - t); }, 0.0, inf, quad_tol);
    return total;
}

double lp_norm_real(const SimpleFraction& spf, double p)
{
    require(p > 1.0, ErrorKind::domain, "lp_norm_real: p must be > 1");
    require_off_real_line(spf);
    const auto g = [&spf, p](double x) { return std::pow(std::abs(spf(Complex(x, 0.0))), p); };
    return std::pow(integrate_real_line(g, spf.poles()), 1.0 / p);
}

double sup_norm_real(const RealFunction& g, std::span<const Complex> poles)
{
    const CoreInterval ci = core_interval(poles);
    const double half_pi = 0.5 * std::numbers::pi;
    const auto mapped = [&](double theta) { return g(ci.center + ci.radius * std::tan(theta)); };
    double best = sup_norm(mapped, -half_pi, half_pi).value;
    SupNormOptions local;
    local.grid_points = 257;
    for (const Complex& z : poles)
    {
        const double w = 5.0 * std::max(std::abs(z.imag()), 1e-3);
        best = std::max(best, sup_norm(g, z.real() - w, z.real() + w, local).value);
    }
    return best;
}

double sup_norm_real(const SimpleFraction& spf)
{
    require_off_real_line(spf);
    return sup_norm_real([&spf](double x) { return std::abs(spf(Complex(x, 0.0))); },
                         spf.poles());
}

double lp_norm_segment(const SimpleFraction& spf, double p)
{
    require(p >= 1.0, ErrorKind::domain, "lp_norm_segment: p must be >= 1");
    for (const Complex& z : spf.poles())
        require(!(z.imag() == 0.0 && std::abs(z.real()) <= 1.0), ErrorKind::pole_on_interval,
                "lp_norm_segment: pole on [-1, 1]");
    const auto g = [&spf, p](double x) { return std::pow(std::abs(spf(Complex(x, 0.0))), p); };
    return std::pow(integrate_with_breaks(g, -1.0, 1.0, spf.poles()), 1.0 / p);
}

double sup_norm_circle(const std::function<double(Complex)>& g, double r)
{
    require(r > 0, ErrorKind::domain, "sup_norm_circle: r must be > 0");
    return sup_norm([&g, r](double t) { return g(std::polar(r, t)); }, 0.0,
                    2.0 * std::numbers::pi)
        .value;
}

} // namespace spfkit
