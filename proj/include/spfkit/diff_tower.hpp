#ifndef SPFKIT_DIFF_TOWER_HPP
#define SPFKIT_DIFF_TOWER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "spfkit/polynomial.hpp"
#include "spfkit/simple_fraction.hpp"

namespace spfkit
{

/// Deepest operator F_s the tower will build.
inline constexpr std::size_t max_tower_depth = 12;

///
/// Polynomial with exact integer coefficients in w_0..w_12, where w_i stands
/// for the i-th derivative of w. Monomials are exponent vectors.
///
class DiffPolynomial
{
public:
    using Monomial = std::array<std::uint8_t, max_tower_depth + 1>;
    using Terms = std::map<Monomial, std::int64_t>;

    DiffPolynomial() = default;
    explicit DiffPolynomial(Terms terms);

    /// The single variable w_i.
    static DiffPolynomial variable(std::size_t i);

    const Terms& terms() const noexcept { return m_terms; }
    bool contains_variable(std::size_t i) const;
    /// Largest exponent of w_i over all terms.
    unsigned degree_in(std::size_t i) const;
    std::int64_t coefficient_sum() const;

    /// Evaluate with w_i := w[i]; missing trailing values are taken as zero.
    Complex operator()(std::span<const Complex> w) const;

    /// Total derivative along z: w_i -> w_{i+1} term-wise (Leibniz rule).
    DiffPolynomial derivative() const;
    DiffPolynomial operator*(const DiffPolynomial& rhs) const;
    DiffPolynomial operator+(const DiffPolynomial& rhs) const;
    DiffPolynomial operator-(const DiffPolynomial& rhs) const;
    bool operator==(const DiffPolynomial& rhs) const { return m_terms == rhs.m_terms; }

    std::string to_string() const;

private:
    Terms m_terms;
};

///
/// F_0 = w_0, F_{s+1} = w_0 F_s + D(F_s).
///
/// For an analytic u with w = u'/u, u^{(s+1)} = u F_s(w). Each F_s splits as
/// w_s + H_s(w_0, ..., w_{s-1}).
///
class DiffOperatorTower
{
public:
    explicit DiffOperatorTower(std::vector<DiffPolynomial> ops) : m_ops(std::move(ops)) {}

    /// Highest available index S (operators F_0..F_S).
    std::size_t depth() const noexcept { return m_ops.size() - 1; }
    const DiffPolynomial& F(std::size_t s) const { return m_ops.at(s); }
    DiffPolynomial H(std::size_t s) const { return F(s) - DiffPolynomial::variable(s); }

private:
    std::vector<DiffPolynomial> m_ops;
};

/// Builds F_0..F_S. Throws Error(size_limit) for S > 12.
DiffOperatorTower build_tower(std::size_t max_order);

/// h_s = F_s(b_0, ..., b_s) = b_s + H_s(b_0, ..., b_{s-1}) for s < b.size().
CVector reduce_values(const DiffOperatorTower& tower, std::span<const Complex> b);

/// F_n evaluated at w_i = rho^{(i)}(z); equals Q^{(n+1)}(z)/Q(z), which
/// vanishes whenever order(spf) <= n.
Complex ode_residual(const SimpleFraction& spf, std::size_t n, Complex z);
Complex ode_residual(const DiffOperatorTower& tower, const SimpleFraction& spf,
                     std::size_t n, Complex z);

} // namespace spfkit

#endif
