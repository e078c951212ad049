#ifndef SPFKIT_ROOTS_HPP
#define SPFKIT_ROOTS_HPP

#include "spfkit/polynomial.hpp"

namespace spfkit
{

struct RootCluster
{
    Complex center;
    std::size_t multiplicity;
};

/// Roots of a polynomial counted with multiplicity.
struct RootSet
{
    CVector roots;
    /// Roots grouped by proximity (radius sqrt(tol)).
    std::vector<RootCluster> clusters;
    /// max |p(root)| over the returned roots.
    double residual = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

struct RootOptions
{
    double tol = 1e-12;
    std::size_t max_iterations = 1000;
};

///
/// Simultaneous Aberth-Ehrlich iteration on the monic normalization of p.
///
/// Exact zero roots are deflated first. Initial guesses lie on a circle of
/// radius 1 + max|a_i| (monic coefficients). Each root r of the result
/// satisfies |p(r)| <= tol * max|a_i| * (1 + |r|)^deg when `converged`;
/// otherwise the partial iterates are returned with converged == false.
///
RootSet find_roots(const ComplexPolynomial& p, const RootOptions& opts = {});

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots,
                                       double radius);

/// Newton identities: monic polynomial whose roots have power sums S_1..S_n.
ComplexPolynomial poly_from_power_sums(std::span<const Complex> power_sums);

/// S_m = sum_k roots_k^m for m = 1..count.
CVector power_sums(std::span<const Complex> roots, std::size_t count);

} // namespace spfkit

#endif
