#include "spfkit/simple_fraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spfkit/error.hpp"

namespace spfkit
{

Complex SimpleFraction::operator()(Complex z) const
{
    return eval(*this, z, 0);
}

bool SimpleFraction::is_real_valued(double tol) const
{
    std::vector<bool> used(m_poles.size(), false);
    for (std::size_t i = 0; i < m_poles.size(); ++i)
    {
        if (used[i])
            continue;
        const Complex target = std::conj(m_poles[i]);
        const double scale = tol * (1 + std::abs(target));
        if (std::abs(m_poles[i].imag()) <= scale)
        {
            used[i] = true;
            continue;
        }
        bool found = false;
        for (std::size_t j = 0; j < m_poles.size(); ++j)
            if (!used[j] && j != i && std::abs(m_poles[j] - target) <= scale)
            {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

Complex eval(const SimpleFraction& spf, Complex z, unsigned s)
{
    double factorial = 1.0;
    for (unsigned k = 2; k <= s; ++k)
        factorial *= k;
    const double sign = (s % 2 == 0) ? 1.0 : -1.0;

    Complex acc{};
    for (const Complex& p : spf.poles())
    {
        const Complex d = z - p;
        if (d == Complex{})
            throw Error(ErrorKind::pole_evaluation, "evaluation at a pole");
        const Complex inv = 1.0 / d;
        Complex term = inv;
        for (unsigned k = 0; k < s; ++k)
            term *= inv;
        acc += term;
    }
    return sign * factorial * acc;
}

SimpleFraction from_polynomial(const ComplexPolynomial& q, const RootOptions& opts)
{
    require(!q.is_zero(), ErrorKind::precondition,
            "from_polynomial: Q must not be identically zero");
    if (q.degree() == 0)
        return SimpleFraction{};
    RootSet rs = find_roots(q, opts);
    if (!rs.converged)
        throw Error(ErrorKind::root_finder,
                    "from_polynomial: root finder did not converge (residual " +
                        std::to_string(rs.residual) + ")");
    return SimpleFraction(std::move(rs.roots));
}

RationalForm to_rational(const SimpleFraction& spf)
{
    ComplexPolynomial q = ComplexPolynomial::from_roots(spf.poles());
    ComplexPolynomial num = q.derivative();
    return {std::move(num), std::move(q)};
}

double pole_distance(std::span<const Complex> a, std::span<const Complex> b)
{
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& x : a)
    {
        std::size_t best = b.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j] && std::abs(x - b[j]) < best_d)
            {
                best_d = std::abs(x - b[j]);
                best = j;
            }
        used[best] = true;
        worst = std::max(worst, best_d / std::max(1.0, std::abs(x)));
    }
    return worst;
}

} // namespace spfkit
