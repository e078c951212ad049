#include <algorithm>
#include <cmath>
#include <numbers>

#include "spfkit/best.hpp"
#include "spfkit/error.hpp"

namespace spfkit
{

ExtremalFraction extremal_fraction(double omega, std::size_t n)
{
    require(omega > 1.0, ErrorKind::domain, "extremal_fraction: omega must be > 1");
    require(n >= 1, ErrorKind::domain, "extremal_fraction: n must be >= 1");
    ExtremalFraction e;
    e.omega = omega;
    e.n = n;
    const double a = std::pow(omega, 1.0 / static_cast<double>(n));
    e.delta = 0.5 * (a + 1.0 / a) - 1.0;
    e.poles.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        const Complex w = std::polar(a, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                            static_cast<double>(n));
        e.poles.push_back(0.5 * (w + 1.0 / w));
    }
    return e;
}

Complex ExtremalFraction::closed_form(Complex z) const
{
    const Complex w = z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
    Complex wn = 1.0;
    for (std::size_t k = 0; k < n; ++k)
        wn *= w;
    const double nn = static_cast<double>(n);
    return 2.0 * nn * w / (w * w - 1.0) * omega * (wn * wn - 1.0) /
           ((wn * omega - 1.0) * (wn - omega));
}

double ExtremalFraction::weighted_norm() const
{
    return 2.0 * static_cast<double>(n) * omega / (omega * omega - 1.0);
}

std::vector<double> ExtremalFraction::alternation_points() const
{
    const double theta = std::acos(2.0 * omega / (omega * omega + 1.0));
    const double nn = static_cast<double>(n);
    std::vector<double> x;
    for (std::size_t k = 0; k <= n; ++k)
        for (double sign : {-1.0, 1.0})
        {
            const double phi = (2.0 * std::numbers::pi * static_cast<double>(k) + sign * theta) / nn;
            if (phi > 0.0 && phi < std::numbers::pi)
                x.push_back(std::cos(phi));
        }
    std::sort(x.begin(), x.end());
    return x;
}

double omega_from_delta(double delta, std::size_t n)
{
    require(delta > 0, ErrorKind::domain, "omega_from_delta: delta must be > 0");
    const double s = 1.0 + delta;
    const double a = s + std::sqrt(s * s - 1.0);
    return std::pow(a, static_cast<double>(n));
}

double chebyshev_t(std::size_t n, double x)
{
    if (n == 0)
        return 1.0;
    double t0 = 1.0, t1 = x;
    for (std::size_t k = 1; k < n; ++k)
    {
        const double t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

double chebyshev_weighted_norm(double delta, std::size_t n)
{
    const double t = chebyshev_t(n, 1.0 + delta);
    return static_cast<double>(n) / std::sqrt(t * t - 1.0);
}

} // namespace spfkit
