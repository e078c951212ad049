#ifndef SPFKIT_POLYNOMIAL_HPP
#define SPFKIT_POLYNOMIAL_HPP

#include <complex>
#include <limits>
#include <span>
#include <vector>

namespace spfkit
{

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

///
/// Dense polynomial with complex coefficients stored in ascending degree.
///
/// Exact trailing zeros are stripped on construction, so the last stored
/// coefficient is nonzero unless the polynomial is identically zero.
///
class ComplexPolynomial
{
public:
    /// Degree reported by the zero polynomial.
    static constexpr int minus_infinity = std::numeric_limits<int>::min();

    ComplexPolynomial() = default;
    explicit ComplexPolynomial(CVector coeffs);
    ComplexPolynomial(std::initializer_list<Complex> coeffs);

    static ComplexPolynomial constant(Complex c);
    static ComplexPolynomial monomial(std::size_t power, Complex c = 1.0);
    /// Monic polynomial prod (z - r) over the given roots.
    static ComplexPolynomial from_roots(std::span<const Complex> roots);

    int degree() const noexcept
    {
        return m_coeffs.empty() ? minus_infinity
                                : static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept { return m_coeffs.empty(); }
    const CVector& coeffs() const noexcept { return m_coeffs; }
    /// Coefficient of z^i, zero beyond the degree.
    Complex operator[](std::size_t i) const noexcept
    {
        return i < m_coeffs.size() ? m_coeffs[i] : Complex{};
    }
    Complex leading() const noexcept
    {
        return m_coeffs.empty() ? Complex{} : m_coeffs.back();
    }
    double max_abs_coeff() const noexcept;

    Complex operator()(Complex z) const noexcept;
    /// Running bound of the Horner rounding error at z (sum |a_i| |z|^i).
    double abs_sum(double r) const noexcept;

    ComplexPolynomial derivative(unsigned order = 1) const;
    ComplexPolynomial monic() const;
    /// Drops leading coefficients whose magnitude is below rel_tol * max|a_i|.
    ComplexPolynomial trimmed(double rel_tol) const;

    ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator*=(Complex s);

    friend ComplexPolynomial operator+(ComplexPolynomial a,
                                       const ComplexPolynomial& b)
    {
        return a += b;
    }
    friend ComplexPolynomial operator-(ComplexPolynomial a,
                                       const ComplexPolynomial& b)
    {
        return a -= b;
    }
    friend ComplexPolynomial operator*(ComplexPolynomial a, Complex s)
    {
        return a *= s;
    }
    friend ComplexPolynomial operator*(Complex s, ComplexPolynomial a)
    {
        return a *= s;
    }
    friend ComplexPolynomial operator*(const ComplexPolynomial& a,
                                       const ComplexPolynomial& b);

private:
    void normalize();

    CVector m_coeffs;
};

/// Quotient and remainder of polynomial long division (b must be nonzero).
std::pair<ComplexPolynomial, ComplexPolynomial>
divide(const ComplexPolynomial& a, const ComplexPolynomial& b);

} // namespace spfkit

#endif
