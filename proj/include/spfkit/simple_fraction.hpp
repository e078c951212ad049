#ifndef SPFKIT_SIMPLE_FRACTION_HPP
#define SPFKIT_SIMPLE_FRACTION_HPP

#include "spfkit/polynomial.hpp"
#include "spfkit/roots.hpp"

namespace spfkit
{

///
/// Simple partial fraction rho(z) = sum_k 1/(z - z_k), the logarithmic
/// derivative of Q(z) = prod (z - z_k).
///
/// Poles form a multiset: a repeated pole is stored repeatedly. Poles at
/// infinity are omitted, so the order counts finite poles only and the
/// order-0 fraction is identically zero.
///
class SimpleFraction
{
public:
    SimpleFraction() = default;
    explicit SimpleFraction(CVector poles) : m_poles(std::move(poles)) {}

    std::size_t order() const noexcept { return m_poles.size(); }
    const CVector& poles() const noexcept { return m_poles; }

    Complex operator()(Complex z) const;

    /// Poles closed under complex conjugation within tol (real on R).
    bool is_real_valued(double tol = 1e-9) const;

private:
    CVector m_poles;
};

/// s-th derivative: sum_k (-1)^s s! (z - z_k)^{-s-1}.
/// Throws Error(pole_evaluation) when z coincides with a pole.
Complex eval(const SimpleFraction& spf, Complex z, unsigned derivative = 0);

/// Q'/Q with poles taken from the roots of Q (root-finder failures propagate).
SimpleFraction from_polynomial(const ComplexPolynomial& q, const RootOptions& opts = {});

struct RationalForm
{
    ComplexPolynomial numerator;   ///< Q'
    ComplexPolynomial denominator; ///< Q = prod (z - z_k), monic
};

RationalForm to_rational(const SimpleFraction& spf);

/// Multiset distance: greedy nearest matching, max of |a-b|/max(1,|a|).
/// Returns +inf when the multisets differ in size.
double pole_distance(std::span<const Complex> a, std::span<const Complex> b);

} // namespace spfkit

#endif
