#ifndef SPFKIT_POWER_SERIES_HPP
#define SPFKIT_POWER_SERIES_HPP

#include "spfkit/polynomial.hpp"

namespace spfkit
{

///
/// Truncated Maclaurin series c_0 + c_1 z + ... with a known number of
/// coefficients (its order). Arithmetic never reads past the order and the
/// result of a binary operation carries the smaller of the two orders.
///
class PowerSeries
{
public:
    PowerSeries() = default;
    explicit PowerSeries(CVector coeffs) : m_coeffs(std::move(coeffs)) {}
    PowerSeries(std::initializer_list<Complex> coeffs) : m_coeffs(coeffs) {}

    /// Series of g(z) with g_m = fn(m) for m < order.
    template <typename Fn>
    static PowerSeries generate(std::size_t order, Fn&& fn)
    {
        CVector c(order);
        for (std::size_t m = 0; m < order; ++m)
            c[m] = fn(m);
        return PowerSeries(std::move(c));
    }

    std::size_t order() const noexcept { return m_coeffs.size(); }
    const CVector& coeffs() const noexcept { return m_coeffs; }
    /// Coefficient m; throws Error(precondition) when m >= order.
    Complex at(std::size_t m) const;
    Complex operator[](std::size_t m) const { return at(m); }

    /// Value of the truncated polynomial sum_{m<order} c_m z^m.
    Complex eval(Complex z) const noexcept;
    PowerSeries truncated(std::size_t order) const;
    ComplexPolynomial to_polynomial() const { return ComplexPolynomial(m_coeffs); }

private:
    CVector m_coeffs;
};

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b);
/// Antiderivative with zero constant term; known to one more coefficient.
PowerSeries series_integrate(const PowerSeries& a);
/// exp(a) with c_0 = e^{a_0} and c_k = (1/k) sum_{j=1..k} j a_j c_{k-j}.
PowerSeries series_exp(const PowerSeries& a);

} // namespace spfkit

#endif
