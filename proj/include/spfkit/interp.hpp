#ifndef SPFKIT_INTERP_HPP
#define SPFKIT_INTERP_HPP

#include <cstdint>
#include <optional>

#include "spfkit/linalg.hpp"
#include "spfkit/power_series.hpp"
#include "spfkit/roots.hpp"
#include "spfkit/simple_fraction.hpp"

namespace spfkit
{

// ---------------------------------------------------------------- Pade

struct PadeOptions
{
    /// Roots lambda with |lambda| <= zero_tol are poles at infinity.
    double zero_tol = 1e-12;
    RootOptions roots{};
};

/// Pade SPF through power sums: S_m = -f_{m-1}, poles = 1/lambda_k.
SimpleFraction pade_spf(const PowerSeries& f, std::size_t n, const PadeOptions& opts = {});

/// Pade SPF as the logarithmic derivative of the degree-n partial sum of
/// exp(int_0^z f). Throws Error(degenerate) when that partial sum vanishes.
SimpleFraction pade_spf_exp(const PowerSeries& f, std::size_t n,
                            const PadeOptions& opts = {});

/// First `count` Maclaurin coefficients of an SPF: -sum_k z_k^{-m-1}.
CVector maclaurin_coefficients(const SimpleFraction& spf, std::size_t count);

/// Truncated series form of f(z) - rho(z):
/// (1/Q(z)) sum_{k=n}^{M-1} z^k sum_m q_m f_{k-m}.
Complex pade_remainder(const PowerSeries& f, const SimpleFraction& spf, std::size_t n,
                       Complex z);

/// Unique root in (0,1) of eps^2 = (1 - eps)^{n+1}.
double pade_epsilon(std::size_t n);

/// Upper bound for |f(z) - rho(z)| when |f_{m-1}| <= a^m, valid for
/// |z| < r < (1 - eps_n)/a. Throws Error(domain) outside that range.
double pade_error_bound(double a, std::size_t n, Complex z, double r);

/// True iff every root of poly_from_power_sums(S) lies in |lambda| < a/(1 - eps_n),
/// n = S.size().
bool frequency_bound_check(std::span<const Complex> s, double a);

// ------------------------------------------------------- generalized

///
/// Nodes xi_j with prescribed values b_{j,0..m_j-1}, meaning
/// rho^{(s)}(xi_j) = b_{j,s}.
///
struct InterpolationTable
{
    CVector nodes;
    std::vector<CVector> values;

    std::size_t multiplicity(std::size_t j) const { return values.at(j).size(); }
    std::size_t total() const;
    /// Throws Error(precondition) on duplicate nodes or empty value lists.
    void validate() const;
};

enum class NodeStatus
{
    regular,
    singular,
};

const char* to_string(NodeStatus s) noexcept;

struct GeneralizedSolution
{
    ComplexPolynomial q;
    SimpleFraction spf;
    std::vector<NodeStatus> node_status;

    bool all_regular() const;
};

enum class OrdinaryVerdict
{
    solvable,           ///< an all-regular member was found
    unsolvable,         ///< certified: some node is singular for every member
    not_found,          ///< search failed without a certificate
};

const char* to_string(OrdinaryVerdict v) noexcept;

struct GeneralizedFamily
{
    /// Orthonormal nullspace basis, coefficient vectors q_0..q_n.
    std::vector<CVector> basis;
    /// One member per basis vector.
    std::vector<GeneralizedSolution> members;
    /// All-regular member when one exists.
    std::optional<GeneralizedSolution> regular;
    OrdinaryVerdict verdict = OrdinaryVerdict::not_found;
    /// Nodes where Q(xi_j) = 0 for every member of the family.
    std::vector<std::size_t> forced_singular;
};

struct GeneralizedOptions
{
    /// Relative singular-value cutoff for the nullspace.
    double rank_tol = 1e-10;
    /// Relative threshold for |Q(xi_j)| in node classification.
    double node_tol = 1e-8;
    std::size_t random_trials = 64;
    std::uint64_t seed = 0x5eed;
    RootOptions roots{};
};

/// singular iff |Q(xi_j)| <= tol * max|q_i| * (1 + |xi_j|)^deg.
std::vector<NodeStatus> classify_nodes(const ComplexPolynomial& q, std::span<const Complex> nodes,
                                       double tol = 1e-8);

/// Coefficient matrix of Q^{(s+1)}(xi_j) - h_{j,s} Q(xi_j) = 0 over q_0..q_n.
ComplexMatrix generalized_system(const InterpolationTable& table, std::size_t n);

/// Simple nodes: Q'(xi_j) = b_j Q(xi_j), deg Q <= n.
GeneralizedFamily generalized_interp_simple(std::span<const Complex> nodes,
                                            std::span<const Complex> values, std::size_t n,
                                            const GeneralizedOptions& opts = {});

/// Multiple nodes through the reduced values h_{j,s} of the operator tower.
GeneralizedFamily generalized_interp_multiple(const InterpolationTable& table, std::size_t n,
                                              const GeneralizedOptions& opts = {});

/// Generalized solution built from a coefficient vector.
GeneralizedSolution make_solution(const CVector& coeffs, std::span<const Complex> nodes,
                                  const GeneralizedOptions& opts = {});

// ------------------------------------------------------------ constant

///
/// Interpolation of a constant: Q = sum_{k=0}^n c^{-k} Pi^{(k)} with
/// Pi = prod (z - xi_j), so that rho - c = -c Pi / Q.
///
GeneralizedSolution interpolate_constant(Complex c, std::span<const Complex> nodes,
                                         const GeneralizedOptions& opts = {});

/// The generating polynomial of interpolate_constant alone.
ComplexPolynomial constant_generating_polynomial(Complex c, std::span<const Complex> nodes);

/// Chebyshev nodes cos((2k-1) pi / (2n)), k = 1..n, in increasing order.
std::vector<double> chebyshev_nodes(std::size_t n);

} // namespace spfkit

#endif
