#include <algorithm>
#include <cmath>
#include <numbers>

#include "spfkit/error.hpp"
#include "spfkit/metrics.hpp"

namespace spfkit
{

namespace
{

/// Relative slack for non-strict inequalities that are attained exactly.
constexpr double equality_slack = 1e-12;

InequalityCheck skipped(const std::string& name, const std::string& why)
{
    InequalityCheck c;
    c.name = name;
    c.skipped = true;
    c.holds = true;
    c.note = why;
    return c;
}

bool poles_in_upper_half_plane(const SimpleFraction& spf)
{
    for (const Complex& z : spf.poles())
        if (!(z.imag() > 0))
            return false;
    return spf.order() > 0;
}

bool poles_off_segment(const SimpleFraction& spf)
{
    for (const Complex& z : spf.poles())
        if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0)
            return false;
    return true;
}

std::vector<double> sample_grid(std::span<const Complex> poles, std::size_t samples)
{
    double c = 0.0, r = 1.0;
    for (const Complex& z : poles)
        c += z.real();
    c /= static_cast<double>(std::max<std::size_t>(poles.size(), 1));
    for (const Complex& z : poles)
        r = std::max(r, std::abs(z.real() - c) + 4.0 * std::abs(z.imag()));
    std::vector<double> x(samples);
    const double step = 2.0 * r / static_cast<double>(std::max<std::size_t>(samples - 1, 1));
    for (std::size_t i = 0; i < samples; ++i)
        x[i] = c - r + step * static_cast<double>(i);
    return x;
}

} // namespace

std::vector<InequalityCheck> inequality_suite(const HalfPlanePoles& hp, unsigned selector,
                                              const InequalityOptions& opts)
{
    require(opts.r > 1.0, ErrorKind::domain, "inequality_suite: r must be > 1");
    require(opts.p > opts.r, ErrorKind::domain, "inequality_suite: p must exceed r");
    std::vector<InequalityCheck> out;
    const SimpleFraction spf = hp.spf();
    const double n = static_cast<double>(hp.order());
    const double sup = sup_norm_real(spf);

    if (selector & checks::two_sided_l2_sup)
    {
        const double l2sq =
            integrate_real_line([&hp](double x) { return std::norm(hp.rho(x)); }, hp.poles());
        InequalityCheck lower{"l2_sup_lower", l2sq / (2.0 * n), std::numbers::pi * sup, true, true,
                              false, "(2n)^-1 |rho|_2^2 < pi |rho|_inf"};
        lower.holds = lower.lhs < lower.rhs;
        InequalityCheck upper{"l2_sup_upper", std::numbers::pi * sup, 2.0 * l2sq, true, true, false,
                              "pi |rho|_inf < 2 |rho|_2^2"};
        upper.holds = upper.lhs < upper.rhs;
        out.push_back(lower);
        out.push_back(upper);
    }
    if (selector & checks::sup_vs_lr)
    {
        const double r = opts.r;
        const double s = r / (r - 1.0);
        const double a = 2.0 * r * std::pow(std::sin(std::numbers::pi / r), -s);
        InequalityCheck c{"sup_vs_lr", sup, a * std::pow(lp_norm_real(spf, r), s), true, true,
                          false, "|rho|_inf <= 2r sin^-s(pi/r) |rho|_r^s"};
        c.holds = c.lhs <= c.rhs;
        out.push_back(c);
    }
    if (selector & checks::lp_vs_lr)
    {
        const double q = opts.p / (opts.p - 1.0);
        const double s = opts.r / (opts.r - 1.0);
        InequalityCheck c{"lp_vs_lr", std::pow(lp_norm_real(spf, opts.p), q),
                          std::pow(lp_norm_real(spf, opts.r), s), true, false, false,
                          "ratio |rho|_p^q / |rho|_r^s; constant unknown"};
        out.push_back(c);
    }
    return out;
}

std::vector<InequalityCheck> segment_inequality(const SimpleFraction& spf,
                                                const InequalityOptions& opts)
{
    const std::string name = "segment_sup_vs_lr";
    if (!spf.is_real_valued() || !poles_off_segment(spf) || spf.order() == 0)
        return {skipped(name, "needs a real-valued SPF with poles off [-1, 1]")};
    const double n = static_cast<double>(spf.order());
    const double sup = sup_norm([&spf](double x) { return spf(Complex(x, 0.0)).real(); }, -1.0,
                                1.0)
                           .value;
    InequalityCheck c{name, sup, std::pow(n, 2.0 / opts.r) * lp_norm_segment(spf, opts.r), true,
                      false, false, "ratio |rho| / (n^{2/r} |rho|_{L_r[-1,1]})"};
    return {c};
}

std::vector<InequalityCheck> derivative_suite(const SimpleFraction& spf, unsigned selector,
                                              const InequalityOptions& opts)
{
    std::vector<InequalityCheck> out;
    const double n = static_cast<double>(spf.order());

    if (selector & (checks::mu_derivative | checks::rho_mu_derivative))
    {
        if (!poles_in_upper_half_plane(spf))
        {
            const std::string why = "poles must lie in the upper half-plane";
            if (selector & checks::mu_derivative)
                out.push_back(skipped("mu_derivative", why));
            if (selector & checks::rho_mu_derivative)
                out.push_back(skipped("rho_mu_derivative", why));
        }
        else
        {
            const HalfPlanePoles hp(spf.poles());
            const double nu_sup =
                sup_norm_real([&hp](double x) { return std::abs(hp.nu(x)); }, hp.poles());
            InequalityCheck mu_c{"mu_derivative", 0, 1, true, true, false,
                                 "|mu'| <= (|nu| + |nu|_inf) mu"};
            InequalityCheck rm_c{"rho_mu_derivative", 0, 1, true, true, false,
                                 "|rho'| + |mu'| <= 2 (|nu| + |nu|_inf) mu"};
            double worst_mu = -1.0, worst_rm = -1.0;
            for (double x : sample_grid(hp.poles(), opts.samples))
            {
                const double chi = (std::abs(hp.nu(x)) + nu_sup) * hp.mu(x);
                const double dmu = std::abs(hp.mu_prime(x));
                const double drho = std::abs(hp.rho_prime(x));
                if (dmu / chi > worst_mu)
                {
                    worst_mu = dmu / chi;
                    mu_c.lhs = dmu;
                    mu_c.rhs = chi;
                }
                if ((drho + dmu) / (2 * chi) > worst_rm)
                {
                    worst_rm = (drho + dmu) / (2 * chi);
                    rm_c.lhs = drho + dmu;
                    rm_c.rhs = 2 * chi;
                }
            }
            mu_c.holds = mu_c.lhs <= mu_c.rhs * (1 + equality_slack);
            rm_c.holds = rm_c.lhs <= rm_c.rhs * (1 + equality_slack);
            if (selector & checks::mu_derivative)
                out.push_back(mu_c);
            if (selector & checks::rho_mu_derivative)
                out.push_back(rm_c);
        }
    }

    if (selector & checks::circle_derivative)
    {
        const double r = opts.circle_radius;
        bool outside = spf.order() > 0;
        for (const Complex& z : spf.poles())
            outside = outside && std::abs(z) > r;
        if (!outside)
            out.push_back(skipped("circle_derivative", "poles must lie outside |z| = r"));
        else
        {
            const double d =
                sup_norm_circle([&spf](Complex z) { return std::abs(eval(spf, z, 1)); }, r);
            const double v = sup_norm_circle([&spf](Complex z) { return std::abs(spf(z)); }, r);
            InequalityCheck c{"circle_derivative", d, v * (n / r + 2.0 * v), true, true, false,
                              "|rho'| <= |rho| (n/r + 2|rho|) on |z| = r"};
            c.holds = c.lhs <= c.rhs * (1 + equality_slack);
            out.push_back(c);
        }
    }

    if (selector & checks::segment_derivative)
    {
        if (!spf.is_real_valued() || !poles_off_segment(spf) || spf.order() == 0)
            out.push_back(skipped("segment_derivative",
                                  "needs a real-valued SPF with poles off [-1, 1]"));
        else
        {
            const double w = sup_norm(
                                 [&spf](double x) {
                                     return std::sqrt(1 - x * x) *
                                            std::abs(eval(spf, Complex(x, 0.0), 1));
                                 },
                                 -1.0, 1.0)
                                 .value /
                             n;
            const double sup =
                sup_norm([&spf](double x) { return std::abs(spf(Complex(x, 0.0))); }, -1.0, 1.0)
                    .value;
            InequalityCheck c{"segment_derivative", w, sup, true, false, false,
                              "max sqrt(1-x^2)|rho'|/n against |rho| on [-1, 1]"};
            out.push_back(c);
        }
    }
    return out;
}

double first_order_equality_gap(const HalfPlanePoles& hp, double lo, double hi,
                                std::size_t samples)
{
    require(samples >= 2 && lo < hi, ErrorKind::precondition,
            "first_order_equality_gap: need samples >= 2 and lo < hi");
    const double nu_sup = sup_norm_real([&hp](double x) { return std::abs(hp.nu(x)); }, hp.poles());
    double gap = 0.0;
    for (std::size_t i = 0; i < samples; ++i)
    {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
        const double chi = (std::abs(hp.nu(x)) + nu_sup) * hp.mu(x);
        const double lhs = std::abs(hp.rho_prime(x)) + std::abs(hp.mu_prime(x));
        gap = std::max(gap, std::abs(lhs - 2.0 * chi));
    }
    return gap;
}

} // namespace spfkit
