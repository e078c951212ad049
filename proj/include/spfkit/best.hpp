#ifndef SPFKIT_BEST_HPP
#define SPFKIT_BEST_HPP

#include <string>

#include "spfkit/linalg.hpp"
#include "spfkit/simple_fraction.hpp"
#include "spfkit/sup_norm.hpp"

namespace spfkit
{

// ----------------------------------------------------------- alternance

struct AlternanceReport
{
    /// Increasing points of the longest sign-alternating run of near-maximal extrema.
    std::vector<double> points;
    /// Residual values at those points.
    std::vector<double> residuals;
    /// sup norm of the residual on the interval.
    double deviation = 0.0;
    std::size_t count = 0;
    /// (max |e| - min |e|) / max |e| over the alternance points.
    double equalization = 0.0;
};

/// Default qualifying threshold: |e| >= (1 - tol) * deviation.
inline constexpr double alternance_tol = 1e-6;

AlternanceReport alternance_detect(const RealFunction& residual, double a, double b,
                                   double tol = alternance_tol,
                                   const SupNormOptions& opts = {});

/// Residual f - rho for a real-valued SPF.
AlternanceReport alternance_detect(const RealFunction& f, const SimpleFraction& spf, double a,
                                   double b, double tol = alternance_tol,
                                   const SupNormOptions& opts = {});

/// x -> f(x) - Re rho(x).
RealFunction residual_function(const RealFunction& f, const SimpleFraction& spf);

enum class CriterionVerdict
{
    certified_best,
    not_applicable,
    fails,
};

const char* to_string(CriterionVerdict v) noexcept;

struct CriterionReport
{
    CriterionVerdict verdict = CriterionVerdict::not_applicable;
    AlternanceReport alternance;
    std::string reason;
};

///
/// Alternance criterion on [-1, 1] for an SPF of order n whose poles lie
/// outside the closed unit disk: best iff the residual has an alternance of
/// n + 1 points. The criterion says nothing when the pole condition fails.
/// Throws Error(precondition) unless spf is real-valued.
///
CriterionReport alternance_criterion(const RealFunction& residual, const SimpleFraction& spf,
                                     std::size_t n, double tol = alternance_tol);

/// min_j |e(t_j)| for points where e alternates in sign; a lower bound for the
/// least deviation. Throws Error(precondition) if the signs do not alternate.
double vallee_poussin_bound(const RealFunction& residual, std::span<const double> points);

// ---------------------------------------------------------------- Remez

struct RemezOptions
{
    /// Relative spread of the interval norms at which iteration stops.
    double tol = 1e-8;
    /// Node-widening steps before switching to Newton equalization.
    std::size_t widening_iterations = 400;
    std::size_t newton_iterations = 60;
};

struct DeviationBounds
{
    double lower;
    double upper;
};

struct RemezResult
{
    double c = 0.0;
    std::size_t n = 0;
    std::vector<double> nodes;
    ComplexPolynomial q;
    SimpleFraction spf;
    /// Sup norms of rho - c on [xi_{k-1}, xi_k], xi_0 = -1, xi_{n+1} = 1.
    std::vector<double> interval_norms;
    double deviation = 0.0;
    /// (max N - min N) / max N.
    double equalization = 0.0;
    AlternanceReport alternance;
    /// Overall norm after every accepted iteration.
    std::vector<double> history;
    std::size_t iterations = 0;
    bool converged = false;
    /// |c| < n/8, where an alternance of n + 1 points is known to characterize the optimum.
    bool in_guaranteed_regime = false;
};

///
/// Best approximation of a real constant c on [-1, 1] by SPFs of order n.
/// Node widening (enlarge the interval with the smallest norm, halve the
/// step when the overall norm fails to drop) followed by Newton
/// equalization of the interval norms with a monotone line search.
///
RemezResult remez_constant(double c, std::size_t n, const RemezOptions& opts = {});

/// rho - c = -c Pi / Q for the constant-interpolating SPF on the given real
/// nodes, evaluated in a cancellation-free form.
double constant_residual(double c, std::span<const double> nodes, double x);

/// Two-sided estimate of the least deviation of c by SPFs of order n.
DeviationBounds constant_deviation_bounds(double c, std::size_t n);

// ------------------------------------------------------------- extremal

struct ExtremalFraction
{
    double omega = 0.0;
    std::size_t n = 0;
    CVector poles;
    /// Distance of the real pole (a + 1/a)/2 from the segment, a = omega^{1/n}.
    double delta = 0.0;

    SimpleFraction spf() const { return SimpleFraction(poles); }
    /// Closed-form value through z = (w + 1/w)/2.
    Complex closed_form(Complex z) const;
    /// max of sqrt(1 - x^2) |rho| on [-1, 1]: 2 n omega / (omega^2 - 1).
    double weighted_norm() const;
    /// Points x = cos(phi) in [-1, 1] with cos(n phi) = 2 omega / (omega^2 + 1), increasing.
    std::vector<double> alternation_points() const;
};

/// Throws Error(domain) unless omega > 1 and n >= 1.
ExtremalFraction extremal_fraction(double omega, std::size_t n);

/// omega with omega^{1/n} + omega^{-1/n} = 2 (1 + delta).
double omega_from_delta(double delta, std::size_t n);

/// n / sqrt(T_n(1 + delta)^2 - 1).
double chebyshev_weighted_norm(double delta, std::size_t n);

/// Chebyshev polynomial T_n at real x (any x).
double chebyshev_t(std::size_t n, double x);

// -------------------------------------------------------- counterexamples

struct CounterexampleReport
{
    std::size_t m = 0;
    std::size_t n = 0;
    double epsilon = 0.0;
    /// Simple real zeros of P'Q - Q'P in (-1, 1), increasing.
    std::vector<double> zeros;
    /// zeros.size() == 2n - 2.
    bool achieved = false;
};

///
/// P = eps + prod_{k=1..m} (x + 2^{-k})^2, Q = eps + prod (x - 2^{-k})^2.
/// Halves eps from the initial value until 2n - 2 zeros appear or eps
/// falls below the floor.
///
CounterexampleReport counterexample_2n_alternance(std::size_t m, double epsilon = 1e-4,
                                                  double floor = 1e-12);

/// e(x) = x + 1 - (2x + lambda)/(x^2 + lambda x + 1).
double nonuniqueness_residual(double x, double lambda);

/// lambda in (1, 2) where min_{[-1,1]} e = -1, by bisection.
double nonuniqueness_lambda_star(double tol = 1e-12);

// ------------------------------------------------------------ Borchardt

/// Ryser's formula; n <= 12.
Complex permanent(const ComplexMatrix& a);

/// det [1/(x_i - y_j)] = prod_{i<j} (x_j - x_i)(y_i - y_j) / prod_{i,j} (x_i - y_j).
Complex cauchy_determinant(std::span<const Complex> x, std::span<const Complex> y);

struct BorchardtReport
{
    Complex det_squared;  ///< det [(xi_l - z_j)^{-2}]
    Complex det;          ///< det [(xi_l - z_j)^{-1}]
    Complex perm;         ///< perm [(xi_l - z_j)^{-1}]
    Complex cauchy;       ///< closed-form value of det
    double identity_error = 0.0; ///< |det_squared - det perm| / |det_squared|
    double cauchy_error = 0.0;   ///< |det - cauchy| / |cauchy|
};

BorchardtReport borchardt_check(std::span<const Complex> xi, std::span<const Complex> z);

} // namespace spfkit

#endif
