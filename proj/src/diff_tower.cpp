#include "spfkit/diff_tower.hpp"

#include <algorithm>
#include <sstream>

#include "spfkit/error.hpp"

namespace spfkit
{

DiffPolynomial::DiffPolynomial(Terms terms) : m_terms(std::move(terms))
{
    std::erase_if(m_terms, [](const auto& t) { return t.second == 0; });
}

DiffPolynomial DiffPolynomial::variable(std::size_t i)
{
    require(i <= max_tower_depth, ErrorKind::size_limit,
            "DiffPolynomial: variable index beyond tower depth");
    Monomial m{};
    m[i] = 1;
    return DiffPolynomial(Terms{{m, 1}});
}

bool DiffPolynomial::contains_variable(std::size_t i) const
{
    return degree_in(i) > 0;
}

unsigned DiffPolynomial::degree_in(std::size_t i) const
{
    unsigned d = 0;
    for (const auto& [m, c] : m_terms)
        d = std::max<unsigned>(d, m[i]);
    return d;
}

std::int64_t DiffPolynomial::coefficient_sum() const
{
    std::int64_t s = 0;
    for (const auto& [m, c] : m_terms)
        s += c;
    return s;
}

Complex DiffPolynomial::operator()(std::span<const Complex> w) const
{
    Complex acc{};
    for (const auto& [m, c] : m_terms)
    {
        Complex term = static_cast<double>(c);
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            if (m[i] == 0)
                continue;
            const Complex wi = i < w.size() ? w[i] : Complex{};
            for (unsigned e = 0; e < m[i]; ++e)
                term *= wi;
        }
        acc += term;
    }
    return acc;
}

DiffPolynomial DiffPolynomial::derivative() const
{
    Terms out;
    for (const auto& [m, c] : m_terms)
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            if (m[i] == 0)
                continue;
            require(i + 1 <= max_tower_depth, ErrorKind::size_limit,
                    "DiffPolynomial::derivative: exceeds tower depth");
            Monomial next = m;
            --next[i];
            ++next[i + 1];
            out[next] += c * m[i];
        }
    return DiffPolynomial(std::move(out));
}

DiffPolynomial DiffPolynomial::operator*(const DiffPolynomial& rhs) const
{
    Terms out;
    for (const auto& [ma, ca] : m_terms)
        for (const auto& [mb, cb] : rhs.m_terms)
        {
            Monomial m{};
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            out[m] += ca * cb;
        }
    return DiffPolynomial(std::move(out));
}

DiffPolynomial DiffPolynomial::operator+(const DiffPolynomial& rhs) const
{
    Terms out = m_terms;
    for (const auto& [m, c] : rhs.m_terms)
        out[m] += c;
    return DiffPolynomial(std::move(out));
}

DiffPolynomial DiffPolynomial::operator-(const DiffPolynomial& rhs) const
{
    Terms out = m_terms;
    for (const auto& [m, c] : rhs.m_terms)
        out[m] -= c;
    return DiffPolynomial(std::move(out));
}

std::string DiffPolynomial::to_string() const
{
    if (m_terms.empty())
        return "0";
    // Highest power of w_0 first, matching the usual way of writing F_s.
    std::vector<std::pair<Monomial, std::int64_t>> sorted(m_terms.begin(), m_terms.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted)
    {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const std::int64_t ac = c < 0 ? -c : c;
        bool has_var = false;
        for (std::uint8_t e : m)
            has_var |= e > 0;
        if (ac != 1 || !has_var)
            os << ac;
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            if (m[i] == 0)
                continue;
            os << "w" << i;
            if (m[i] > 1)
                os << "^" << static_cast<int>(m[i]);
        }
    }
    return os.str();
}

DiffOperatorTower build_tower(std::size_t max_order)
{
    require(max_order <= max_tower_depth, ErrorKind::size_limit,
            "build_tower: depth " + std::to_string(max_order) + " exceeds the cap of " +
                std::to_string(max_tower_depth));
    std::vector<DiffPolynomial> ops;
    ops.reserve(max_order + 1);
    const DiffPolynomial w0 = DiffPolynomial::variable(0);
    ops.push_back(w0);
    for (std::size_t s = 0; s < max_order; ++s)
        ops.push_back(w0 * ops[s] + ops[s].derivative());
    return DiffOperatorTower(std::move(ops));
}

CVector reduce_values(const DiffOperatorTower& tower, std::span<const Complex> b)
{
    require(b.empty() || tower.depth() + 1 >= b.size(), ErrorKind::size_limit,
            "reduce_values: tower too shallow for the given values");
    CVector h(b.size());
    for (std::size_t s = 0; s < b.size(); ++s)
        h[s] = tower.F(s)(b.subspan(0, s + 1));
    return h;
}

Complex ode_residual(const DiffOperatorTower& tower, const SimpleFraction& spf,
                     std::size_t n, Complex z)
{
    require(n <= tower.depth(), ErrorKind::size_limit,
            "ode_residual: order bound exceeds tower depth");
    CVector w(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        w[i] = eval(spf, z, static_cast<unsigned>(i));
    return tower.F(n)(w);
}

Complex ode_residual(const SimpleFraction& spf, std::size_t n, Complex z)
{
    return ode_residual(build_tower(n), spf, n, z);
}

} // namespace spfkit
