#ifndef SPFKIT_HSUM_HPP
#define SPFKIT_HSUM_HPP

#include <string>

#include "spfkit/power_series.hpp"
#include "spfkit/roots.hpp"

namespace spfkit
{

/// H(z) = sum_k lambda_k h(lambda_k z) for a base series h.
struct HSum
{
    CVector freqs;
    PowerSeries base;

    Complex operator()(Complex z) const;
    /// Maclaurin coefficients h_m S_{m+1}(lambda) for m < min(count, base order).
    CVector coefficients(std::size_t count) const;
};

/// sum_k mu_k h(lambda_k z).
struct AFSum
{
    CVector amps;
    CVector freqs;
    PowerSeries base;

    Complex operator()(Complex z) const;
    /// Maclaurin coefficients h_m sum_k mu_k lambda_k^m.
    CVector coefficients(std::size_t count) const;
};

/// Pade interpolation by an h-sum: S_{m+1}(lambda) = f_m / h_m, m < n.
/// Throws Error(precondition) when h_m = 0 while f_m != 0.
HSum hsum_pade(const PowerSeries& f, const PowerSeries& h, std::size_t n,
               const RootOptions& opts = {});

/// Nodes with power sums S_j = j, so that z h'(z) = -h(z) + sum lambda_k h(lambda_k z)
/// on polynomials of degree <= n-1. With `literal`, the nodes come from
/// the v-recurrence with v_1 = -1 instead (kept for comparison; it does not give
/// these power sums).
CVector diff_nodes(std::size_t n, bool literal = false);

/// Nodes with power sums S_j = 1/j, so that int_0^z h = z sum lambda_k h(lambda_k z)
/// on polynomials of degree <= n-1. `literal` as for diff_nodes.
CVector int_nodes(std::size_t n, bool literal = false);

/// Monic polynomial of the v-recurrence: P_k = lambda P_{k-1} - v_k,
/// v_1 = -1. kind = 1 (differentiation) or 2 (integration).
ComplexPolynomial literal_node_polynomial(int kind, std::size_t n);

/// Frequencies with S_m = a^{m-1}, m = 1..n (a > 1).
CVector extrap_freqs(double a, std::size_t n);

/// a - (a - 1)/n.
double extrap_freq_bound(double a, std::size_t n);

/// Largest tuple count accepted by extrapolate.
inline constexpr std::size_t max_extrapolation_tuples = 1'000'000;

/// sum over mu-tuples of (prod lambda) h((prod lambda) z / a^mu).
/// Throws Error(size_limit) when n^mu exceeds the tuple cap.
Complex extrapolate(const PowerSeries& h, double a, std::size_t n, std::size_t mu, Complex z);

/// 1 - (S_{m+1} / a^m)^mu: the coefficient of h_m z^m in h - extrapolate(h).
Complex extrapolation_remainder_factor(double a, std::size_t n, std::size_t mu, std::size_t m);

// ----------------------------------------------------------------- Prony

struct PronyOptions
{
    /// Hankel systems with a larger condition estimate are irregular.
    double max_condition = 1e12;
    /// Minimal pairwise frequency distance relative to max |lambda|.
    double min_separation = 1e-7;
    /// Amplitudes below this fraction of the largest count as zero.
    double zero_amplitude = 1e-12;
    RootOptions roots{};
};

struct PronySolution
{
    CVector moments;
    /// Monic lambda^n + g_{n-1} lambda^{n-1} + ... + g_0; zero when the Hankel system is singular.
    ComplexPolynomial generating;
    CVector amps;
    CVector freqs;
    bool regular = false;
    /// Reciprocal condition estimate of the Hankel matrix.
    double hankel_rcond = 0.0;
    /// min |lambda_j - lambda_k| / max |lambda|.
    double separation = 0.0;
    /// max_m |sum mu lambda^m - s_m| / max(1, |s_m|) over m < 2n.
    double moment_residual = 0.0;
    std::string diagnostics;
};

/// Discrete moments sum mu_k lambda_k^m = s_m, m = 0..2n-1.
PronySolution prony_solve(std::span<const Complex> s, const PronyOptions& opts = {});

/// Moments (1 + (-1)^m)/(m + 1) of (1/x) int_{-x}^{x}, m < 2n.
CVector gauss_moments(std::size_t n);

/// Gauss-Legendre rule as an amplitude-frequency sum with base h.
/// Throws Error(degenerate) if the moment system comes out irregular.
AFSum gauss_quadrature(const PowerSeries& h, std::size_t n, const PronyOptions& opts = {});

// --------------------------------------------------------- regularization

struct RegDiffResult
{
    std::size_t n = 0;
    double p_used = 0.0;
    double q = 0.0;
    std::size_t perturbations = 0;
    PronySolution prony;
    /// amps and freqs with an empty base; attach h to evaluate.
    AFSum sum;
    /// Closed form of the monic generating polynomial.
    ComplexPolynomial closed_form;
    /// max coefficient difference between Prony and closed-form polynomials.
    double closed_form_gap = 0.0;
};

/// -2p(3p + n^2 - 1)/((n - 1)(n - 2)).
double reg_diff_q(std::size_t n, double p);

/// Closed-form monic generating polynomial for regularized differentiation.
ComplexPolynomial reg_diff_generating(std::size_t n, double p);

///
/// Regularized differentiation: moments m with s_{n-1} += p and
/// s_{2n-1} += q(p). When the solution is irregular p is perturbed to
/// p(1 + 2^{-j}) (2^{-j} for p = 0), j = 1..40.
/// Throws Error(no_regular_solution) when every attempt is irregular.
///
RegDiffResult reg_diff(std::size_t n, double p, const PronyOptions& opts = {});

/// z h'(z) through the regularized rule.
Complex reg_diff_apply(const RegDiffResult& r, const PowerSeries& h, Complex z);

struct RegExtrapResult
{
    std::size_t n = 0;
    double a = 0.0;
    double p = 0.0;
    PronySolution prony;
    AFSum sum;
    ComplexPolynomial closed_form;
    double closed_form_gap = 0.0;
    /// delta a with delta = (1 + p/(n a^{n-1}))^{-1/n}.
    double freq_bound = 0.0;
    double max_freq = 0.0;
    bool bound_holds = false;
    /// False if two frequencies coincide numerically.
    bool distinct = false;
};

/// Closed-form monic generating polynomial for regularized extrapolation.
ComplexPolynomial reg_extrap_generating(double a, std::size_t n, double p);

/// Regularized extrapolation: moments a^m with s_{n-1} += p (a > 0, p > 0).
RegExtrapResult reg_extrap(double a, std::size_t n, double p, const PronyOptions& opts = {});

/// h(az) through the regularized rule.
Complex reg_extrap_apply(const RegExtrapResult& r, const PowerSeries& h, Complex z);

/// sum_{m >= 2n} |h_m| |a z|^m over the known coefficients of h.
double reg_extrap_remainder_bound(const PowerSeries& h, double a, std::size_t n, Complex z);

} // namespace spfkit

#endif
