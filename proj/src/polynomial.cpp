#include "spfkit/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "spfkit/error.hpp"

namespace spfkit
{

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::precondition:
        return "precondition";
    case ErrorKind::domain:
        return "domain";
    case ErrorKind::pole_evaluation:
        return "pole-evaluation";
    case ErrorKind::pole_on_interval:
        return "pole-on-interval";
    case ErrorKind::root_finder:
        return "root-finder";
    case ErrorKind::size_limit:
        return "size-limit";
    case ErrorKind::degenerate:
        return "degenerate";
    case ErrorKind::no_regular_solution:
        return "no-regular-solution";
    }
    return "unknown";
}

ComplexPolynomial::ComplexPolynomial(CVector coeffs) : m_coeffs(std::move(coeffs))
{
    normalize();
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs)
    : m_coeffs(coeffs)
{
    normalize();
}

ComplexPolynomial ComplexPolynomial::constant(Complex c)
{
    return ComplexPolynomial(CVector{c});
}

ComplexPolynomial ComplexPolynomial::monomial(std::size_t power, Complex c)
{
    CVector v(power + 1);
    v[power] = c;
    return ComplexPolynomial(std::move(v));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots)
{
    CVector c{1.0};
    c.reserve(roots.size() + 1);
    for (const Complex r : roots)
    {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i)
            c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return ComplexPolynomial(std::move(c));
}

void ComplexPolynomial::normalize()
{
    while (!m_coeffs.empty() && m_coeffs.back() == Complex{})
        m_coeffs.pop_back();
}

double ComplexPolynomial::max_abs_coeff() const noexcept
{
    double m = 0.0;
    for (const Complex& c : m_coeffs)
        m = std::max(m, std::abs(c));
    return m;
}

Complex ComplexPolynomial::operator()(Complex z) const noexcept
{
    Complex acc{};
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

double ComplexPolynomial::abs_sum(double r) const noexcept
{
    double acc = 0.0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it)
        acc = acc * r + std::abs(*it);
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative(unsigned order) const
{
    CVector c = m_coeffs;
    for (unsigned k = 0; k < order && !c.empty(); ++k)
    {
        for (std::size_t i = 1; i < c.size(); ++i)
            c[i - 1] = c[i] * static_cast<double>(i);
        c.pop_back();
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::monic() const
{
    require(!is_zero(), ErrorKind::precondition,
            "monic(): zero polynomial has no leading coefficient");
    ComplexPolynomial out = *this;
    const Complex lead = leading();
    for (Complex& c : out.m_coeffs)
        c /= lead;
    out.m_coeffs.back() = 1.0;
    return out;
}

ComplexPolynomial ComplexPolynomial::trimmed(double rel_tol) const
{
    const double cut = rel_tol * max_abs_coeff();
    CVector c = m_coeffs;
    while (!c.empty() && std::abs(c.back()) <= cut)
        c.pop_back();
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs)
{
    if (m_coeffs.size() < rhs.m_coeffs.size())
        m_coeffs.resize(rhs.m_coeffs.size());
    for (std::size_t i = 0; i < rhs.m_coeffs.size(); ++i)
        m_coeffs[i] += rhs.m_coeffs[i];
    normalize();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs)
{
    if (m_coeffs.size() < rhs.m_coeffs.size())
        m_coeffs.resize(rhs.m_coeffs.size());
    for (std::size_t i = 0; i < rhs.m_coeffs.size(); ++i)
        m_coeffs[i] -= rhs.m_coeffs[i];
    normalize();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Complex s)
{
    for (Complex& c : m_coeffs)
        c *= s;
    normalize();
    return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    CVector c(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j)
            c[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
    return ComplexPolynomial(std::move(c));
}

std::pair<ComplexPolynomial, ComplexPolynomial>
divide(const ComplexPolynomial& a, const ComplexPolynomial& b)
{
    require(!b.is_zero(), ErrorKind::precondition, "divide(): zero divisor");
    if (a.degree() < b.degree())
        return {ComplexPolynomial{}, a};
    CVector rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    CVector quo(rem.size() - db);
    for (std::size_t k = quo.size(); k-- > 0;)
    {
        const Complex t = rem[k + db] / b.leading();
        quo[k] = t;
        for (std::size_t i = 0; i <= db; ++i)
            rem[k + i] -= t * b[i];
    }
    rem.resize(db);
    return {ComplexPolynomial(std::move(quo)), ComplexPolynomial(std::move(rem))};
}

} // namespace spfkit
