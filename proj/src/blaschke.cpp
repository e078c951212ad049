#include <algorithm>
#include <cmath>
#include <numbers>

#include "spfkit/error.hpp"
#include "spfkit/metrics.hpp"

namespace spfkit
{

HalfPlanePoles::HalfPlanePoles(CVector poles) : m_poles(std::move(poles))
{
    for (const Complex& z : m_poles)
        require(z.imag() > 0, ErrorKind::precondition,
                "HalfPlanePoles: every pole needs Im z > 0");
}

Complex HalfPlanePoles::rho(double x) const
{
    Complex s{};
    for (const Complex& z : m_poles)
        s += 1.0 / (x - z);
    return s;
}

Complex HalfPlanePoles::rho_prime(double x) const
{
    Complex s{};
    for (const Complex& z : m_poles)
    {
        const Complex d = x - z;
        s -= 1.0 / (d * d);
    }
    return s;
}

double HalfPlanePoles::mu(double x) const
{
    double s = 0.0;
    for (const Complex& z : m_poles)
        s += z.imag() / std::norm(x - z);
    return s;
}

double HalfPlanePoles::nu(double x) const
{
    double s = 0.0;
    for (const Complex& z : m_poles)
        s += (x - z.real()) / std::norm(x - z);
    return s;
}

double HalfPlanePoles::mu_prime(double x) const
{
    double s = 0.0;
    for (const Complex& z : m_poles)
    {
        const double d2 = std::norm(x - z);
        s -= 2.0 * z.imag() * (x - z.real()) / (d2 * d2);
    }
    return s;
}

Complex HalfPlanePoles::blaschke(double x) const
{
    Complex b = 1.0;
    for (const Complex& z : m_poles)
        b *= (x - z) / (x - std::conj(z));
    return b;
}

double HalfPlanePoles::blaschke_arg(double x) const
{
    double a = 0.0;
    for (const Complex& z : m_poles)
        a -= 2.0 * std::atan2(z.imag(), x - z.real());
    return a;
}

NotchSet notch_points(const HalfPlanePoles& hp, double phi)
{
    require(phi > 0 && phi < 2 * std::numbers::pi, ErrorKind::precondition,
            "notch_points: phi must lie in (0, 2 pi)");
    NotchSet out;
    out.phi = phi;
    const std::size_t n = hp.order();
    if (n == 0)
        return out;

    double center = 0.0, radius = 0.0;
    for (const Complex& z : hp.poles())
        center += z.real();
    center /= static_cast<double>(n);
    for (const Complex& z : hp.poles())
        radius = std::max(radius, std::abs(z - center));

    const Complex target_value = std::polar(1.0, phi);
    for (std::size_t j = 1; j <= 2 * n; ++j)
    {
        const double target = 0.5 * (phi - 2.0 * std::numbers::pi * static_cast<double>(j));
        double lo = center - radius, hi = center + radius;
        for (double span = radius; hp.blaschke_arg(lo) > target; span *= 2)
            lo = center - 2 * span;
        for (double span = radius; hp.blaschke_arg(hi) < target; span *= 2)
            hi = center + 2 * span;
        for (int it = 0; it < 2000; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (hp.blaschke_arg(mid) < target)
                lo = mid;
            else
                hi = mid;
        }
        const double t = 0.5 * (lo + hi);
        const Complex b = hp.blaschke(t);
        out.max_residual = std::max(out.max_residual, std::abs(b * b - target_value));
        out.points.push_back(t);
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

double l2_quadrature(const HalfPlanePoles& hp, double phi)
{
    double s = 0.0;
    for (double t : notch_points(hp, phi).points)
        s += hp.mu(t);
    return std::numbers::pi * s;
}

double l2_quadrature_nu(const HalfPlanePoles& hp, double phi)
{
    double s = 0.0;
    for (double t : notch_points(hp, phi).points)
    {
        const double v = hp.nu(t);
        s += v * v / hp.mu(t);
    }
    return std::numbers::pi * s;
}

} // namespace spfkit
