#ifndef SPFKIT_METRICS_HPP
#define SPFKIT_METRICS_HPP

#include <string>

#include "spfkit/simple_fraction.hpp"
#include "spfkit/sup_norm.hpp"

namespace spfkit
{

///
/// SPF whose poles z_k = x_k + i y_k all lie in the upper half-plane.
/// On the real line rho = nu + i mu with mu > 0.
///
class HalfPlanePoles
{
public:
    /// Throws Error(precondition) unless every Im z_k > 0.
    explicit HalfPlanePoles(CVector poles);

    std::size_t order() const noexcept { return m_poles.size(); }
    const CVector& poles() const noexcept { return m_poles; }
    SimpleFraction spf() const { return SimpleFraction(m_poles); }

    Complex rho(double x) const;
    Complex rho_prime(double x) const;
    /// Im rho(x) = sum y_k / |x - z_k|^2.
    double mu(double x) const;
    /// Re rho(x) = sum (x - x_k) / |x - z_k|^2.
    double nu(double x) const;
    double mu_prime(double x) const;
    /// B(x) = prod (x - z_k)/(x - conj z_k).
    Complex blaschke(double x) const;
    /// Continuous argument of B on R, increasing from -2 pi n to 0.
    double blaschke_arg(double x) const;

private:
    CVector m_poles;
};

struct NotchSet
{
    double phi = 0.0;
    /// The 2n increasing solutions of B(t)^2 = e^{i phi}.
    std::vector<double> points;
    /// max |B(t)^2 - e^{i phi}|.
    double max_residual = 0.0;
};

/// Throws Error(precondition) unless 0 < phi < 2 pi.
NotchSet notch_points(const HalfPlanePoles& hp, double phi);

/// pi sum_s mu(t_s), the squared L2(R) norm of rho.
double l2_quadrature(const HalfPlanePoles& hp, double phi);

/// pi sum_s nu(t_s)^2 / mu(t_s), the same quantity.
double l2_quadrature_nu(const HalfPlanePoles& hp, double phi);

// ---------------------------------------------------------------- norms

/// int_R g for g decaying at infinity; breaks at the real parts of the
/// poles inside the core interval and integrates both tails to infinity.
double integrate_real_line(const RealFunction& g, std::span<const Complex> poles);

/// (int_R |rho|^p)^{1/p}, p > 1. Throws Error(pole_on_interval) for real poles.
double lp_norm_real(const SimpleFraction& spf, double p);

/// sup_R |g| through x = c + s tan(theta) plus local scans near each pole.
double sup_norm_real(const RealFunction& g, std::span<const Complex> poles);
double sup_norm_real(const SimpleFraction& spf);

/// (int_{-1}^{1} |rho|^p)^{1/p}. Throws Error(pole_on_interval) for poles on the segment.
double lp_norm_segment(const SimpleFraction& spf, double p);

/// max over |z| = r of |g(z)|.
double sup_norm_circle(const std::function<double(Complex)>& g, double r);

// ---------------------------------------------------------- inequalities

struct InequalityCheck
{
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    /// Only meaningful when asserted and not skipped.
    bool holds = true;
    /// False for observational reports whose constants are unknown.
    bool asserted = true;
    bool skipped = false;
    std::string note;
};

namespace checks
{
inline constexpr unsigned two_sided_l2_sup = 1u << 0; ///< (2n)^{-1}|rho|_2^2 < pi|rho|_inf < 2|rho|_2^2
inline constexpr unsigned sup_vs_lr = 1u << 1;        ///< |rho|_inf <= 2r sin^{-s}(pi/r) |rho|_r^s
inline constexpr unsigned lp_vs_lr = 1u << 2;         ///< |rho|_p^q / |rho|_r^s (observational)
inline constexpr unsigned segment_sup_vs_lr = 1u << 3; ///< |rho| / (n^{2/r} |rho|_{L_r[-1,1]}) (observational)
inline constexpr unsigned mu_derivative = 1u << 4;    ///< |mu'| <= chi
inline constexpr unsigned rho_mu_derivative = 1u << 5; ///< |rho'| + |mu'| <= 2 chi
inline constexpr unsigned circle_derivative = 1u << 6; ///< |rho'| <= |rho| (n/r + 2|rho|) on |z| = r
inline constexpr unsigned segment_derivative = 1u << 7; ///< max sqrt(1-x^2)|rho'|/n (observational)
inline constexpr unsigned all = 0xffu;
} // namespace checks

struct InequalityOptions
{
    /// Exponent r of the L_r norms (r > 1).
    double r = 2.0;
    /// Exponent p of the L_p norm in the observational ratio (p > r).
    double p = 4.0;
    /// Circle radius for the derivative bound.
    double circle_radius = 1.0;
    /// Sample count for pointwise derivative checks.
    std::size_t samples = 2001;
};

/// Norm inequalities on the real line (and the segment ratio when the
/// selector asks for it and the hypotheses hold).
std::vector<InequalityCheck> inequality_suite(const HalfPlanePoles& hp,
                                              unsigned selector = checks::two_sided_l2_sup |
                                                                  checks::sup_vs_lr |
                                                                  checks::lp_vs_lr,
                                              const InequalityOptions& opts = {});

/// Segment ratio for a real-valued SPF with poles off [-1, 1].
std::vector<InequalityCheck> segment_inequality(const SimpleFraction& spf,
                                                const InequalityOptions& opts = {});

///
/// Derivative bounds; checks whose pole hypotheses fail are returned with
/// skipped = true and the reason in `note`. For the pointwise checks lhs and
/// rhs are taken at the sample with the largest lhs/rhs ratio.
///
std::vector<InequalityCheck> derivative_suite(const SimpleFraction& spf,
                                              unsigned selector = checks::mu_derivative |
                                                                  checks::rho_mu_derivative |
                                                                  checks::circle_derivative |
                                                                  checks::segment_derivative,
                                              const InequalityOptions& opts = {});

/// max over x in [lo, hi] (grid of `samples` points) of
/// | |rho'| + |mu'| - 2 chi |, which vanishes for first-order SPFs.
double first_order_equality_gap(const HalfPlanePoles& hp, double lo, double hi,
                                std::size_t samples);

} // namespace spfkit

#endif
