#include "spfkit/power_series.hpp"

#include <algorithm>
#include <string>

#include "spfkit/error.hpp"

namespace spfkit
{

Complex PowerSeries::at(std::size_t m) const
{
    require(m < m_coeffs.size(), ErrorKind::precondition,
            "power series coefficient " + std::to_string(m) +
                " requested beyond order " + std::to_string(m_coeffs.size()));
    return m_coeffs[m];
}

Complex PowerSeries::eval(Complex z) const noexcept
{
    Complex acc{};
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

PowerSeries PowerSeries::truncated(std::size_t order) const
{
    const std::size_t n = std::min(order, m_coeffs.size());
    return PowerSeries(CVector(m_coeffs.begin(), m_coeffs.begin() + n));
}

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    CVector c(n);
    for (std::size_t m = 0; m < n; ++m)
        c[m] = a.coeffs()[m] + b.coeffs()[m];
    return PowerSeries(std::move(c));
}

PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    CVector c(n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j <= m; ++j)
            c[m] += a.coeffs()[j] * b.coeffs()[m - j];
    return PowerSeries(std::move(c));
}

PowerSeries series_integrate(const PowerSeries& a)
{
    CVector c(a.order() + 1);
    for (std::size_t m = 0; m < a.order(); ++m)
        c[m + 1] = a.coeffs()[m] / static_cast<double>(m + 1);
    return PowerSeries(std::move(c));
}

PowerSeries series_exp(const PowerSeries& a)
{
    const std::size_t n = a.order();
    if (n == 0)
        return {};
    const CVector& x = a.coeffs();
    CVector c(n);
    c[0] = std::exp(x[0]);
    for (std::size_t k = 1; k < n; ++k)
    {
        Complex acc{};
        for (std::size_t j = 1; j <= k; ++j)
            acc += static_cast<double>(j) * x[j] * c[k - j];
        c[k] = acc / static_cast<double>(k);
    }
    return PowerSeries(std::move(c));
}

} // namespace spfkit
