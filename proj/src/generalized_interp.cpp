#include <cmath>
#include <numbers>
#include <random>

#include "spfkit/diff_tower.hpp"
#include "spfkit/error.hpp"
#include "spfkit/interp.hpp"

namespace spfkit
{

namespace
{

/// Leading coefficients below this fraction of the largest are treated as zero.
constexpr double coeff_trim = 1e-12;

Complex ipow(Complex x, std::size_t k)
{
    Complex r = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        r *= x;
    return r;
}

bool is_regular_everywhere(const std::vector<NodeStatus>& st)
{
    for (NodeStatus s : st)
        if (s == NodeStatus::singular)
            return false;
    return true;
}

GeneralizedFamily solve_family(const ComplexMatrix& a, std::span<const Complex> nodes,
                               std::size_t n, const GeneralizedOptions& opts)
{
    GeneralizedFamily fam;
    fam.basis = nullspace(a, opts.rank_tol);
    const std::size_t d = fam.basis.size();
    if (d == 0)
    {
        fam.verdict = OrdinaryVerdict::unsolvable;
        return fam;
    }
    for (const CVector& v : fam.basis)
        fam.members.push_back(make_solution(v, nodes, opts));

    // Node functional alpha -> Q_alpha(xi_j) restricted to the nullspace.
    // A node whose functional vanishes is singular for every member; when
    // none vanishes, the union of their kernels is a finite union of proper
    // subspaces, so a generic combination is regular at every node.
    for (std::size_t j = 0; j < nodes.size(); ++j)
    {
        double norm2 = 0.0;
        for (std::size_t b = 0; b < d; ++b)
            norm2 += std::norm(ComplexPolynomial(fam.basis[b])(nodes[j]));
        const double scale = std::pow(1.0 + std::abs(nodes[j]), static_cast<double>(n));
        if (std::sqrt(norm2) <= opts.node_tol * scale)
            fam.forced_singular.push_back(j);
    }
    if (!fam.forced_singular.empty())
    {
        fam.verdict = OrdinaryVerdict::unsolvable;
        return fam;
    }

    for (const GeneralizedSolution& m : fam.members)
        if (m.all_regular())
        {
            fam.regular = m;
            fam.verdict = OrdinaryVerdict::solvable;
            return fam;
        }

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss;
    for (std::size_t t = 0; t < opts.random_trials; ++t)
    {
        CVector q(n + 1);
        for (std::size_t b = 0; b < d; ++b)
        {
            const Complex alpha(gauss(rng), gauss(rng));
            for (std::size_t i = 0; i <= n; ++i)
                q[i] += alpha * fam.basis[b][i];
        }
        GeneralizedSolution s = make_solution(q, nodes, opts);
        if (s.all_regular())
        {
            fam.regular = std::move(s);
            fam.verdict = OrdinaryVerdict::solvable;
            return fam;
        }
    }
    fam.verdict = OrdinaryVerdict::not_found;
    return fam;
}

} // namespace

std::size_t InterpolationTable::total() const
{
    std::size_t m = 0;
    for (const CVector& v : values)
        m += v.size();
    return m;
}

void InterpolationTable::validate() const
{
    require(nodes.size() == values.size(), ErrorKind::precondition,
            "InterpolationTable: one value list per node required");
    for (std::size_t j = 0; j < nodes.size(); ++j)
    {
        require(!values[j].empty(), ErrorKind::precondition,
                "InterpolationTable: node multiplicity must be >= 1");
        require(values[j].size() <= max_tower_depth + 1, ErrorKind::size_limit,
                "InterpolationTable: node multiplicity exceeds tower depth");
        for (std::size_t k = 0; k < j; ++k)
            require(nodes[j] != nodes[k], ErrorKind::precondition,
                    "InterpolationTable: nodes must be distinct");
    }
}

const char* to_string(NodeStatus s) noexcept
{
    return s == NodeStatus::regular ? "regular" : "singular";
}

const char* to_string(OrdinaryVerdict v) noexcept
{
    switch (v)
    {
    case OrdinaryVerdict::solvable:
        return "solvable";
    case OrdinaryVerdict::unsolvable:
        return "unsolvable";
    case OrdinaryVerdict::not_found:
        return "not_found";
    }
    return "unknown";
}

bool GeneralizedSolution::all_regular() const
{
    return is_regular_everywhere(node_status);
}

std::vector<NodeStatus> classify_nodes(const ComplexPolynomial& q, std::span<const Complex> nodes,
                                       double tol)
{
    std::vector<NodeStatus> out;
    out.reserve(nodes.size());
    const double scale = q.max_abs_coeff();
    const double deg = std::max(q.degree(), 0);
    for (const Complex& x : nodes)
    {
        const double limit = tol * scale * std::pow(1.0 + std::abs(x), deg);
        out.push_back(std::abs(q(x)) <= limit ? NodeStatus::singular : NodeStatus::regular);
    }
    return out;
}

GeneralizedSolution make_solution(const CVector& coeffs, std::span<const Complex> nodes,
                                  const GeneralizedOptions& opts)
{
    GeneralizedSolution s;
    s.q = ComplexPolynomial(coeffs).trimmed(coeff_trim);
    require(!s.q.is_zero(), ErrorKind::degenerate, "generalized solution: Q is zero");
    s.node_status = classify_nodes(s.q, nodes, opts.node_tol);
    if (s.q.degree() >= 1)
        s.spf = from_polynomial(s.q, opts.roots);
    return s;
}

ComplexMatrix generalized_system(const InterpolationTable& table, std::size_t n)
{
    table.validate();
    std::size_t depth = 0;
    for (const CVector& v : table.values)
        depth = std::max(depth, v.size() - 1);
    const DiffOperatorTower tower = build_tower(depth);

    const auto cols = static_cast<Eigen::Index>(n + 1);
    ComplexMatrix a(static_cast<Eigen::Index>(table.total()), cols);
    Eigen::Index row = 0;
    for (std::size_t j = 0; j < table.nodes.size(); ++j)
    {
        const Complex xi = table.nodes[j];
        const CVector h = reduce_values(tower, table.values[j]);
        for (std::size_t s = 0; s < h.size(); ++s, ++row)
        {
            const std::size_t order = s + 1;
            for (std::size_t i = 0; i <= n; ++i)
            {
                Complex deriv{};
                if (i >= order)
                {
                    double fall = 1.0;
                    for (std::size_t t = 0; t < order; ++t)
                        fall *= static_cast<double>(i - t);
                    deriv = fall * ipow(xi, i - order);
                }
                a(row, static_cast<Eigen::Index>(i)) = deriv - h[s] * ipow(xi, i);
            }
            const double norm = a.row(row).norm();
            if (norm > 0)
                a.row(row) /= norm;
        }
    }
    return a;
}

GeneralizedFamily generalized_interp_simple(std::span<const Complex> nodes,
                                            std::span<const Complex> values, std::size_t n,
                                            const GeneralizedOptions& opts)
{
    require(nodes.size() == values.size(), ErrorKind::precondition,
            "generalized_interp_simple: one value per node required");
    InterpolationTable t;
    t.nodes.assign(nodes.begin(), nodes.end());
    for (const Complex& b : values)
        t.values.push_back({b});
    return generalized_interp_multiple(t, n, opts);
}

GeneralizedFamily generalized_interp_multiple(const InterpolationTable& table, std::size_t n,
                                              const GeneralizedOptions& opts)
{
    require(n >= 1, ErrorKind::precondition, "generalized interpolation: n must be >= 1");
    const ComplexMatrix a = generalized_system(table, n);
    return solve_family(a, table.nodes, n, opts);
}

ComplexPolynomial constant_generating_polynomial(Complex c, std::span<const Complex> nodes)
{
    require(c != Complex{}, ErrorKind::precondition, "interpolate_constant: c must be nonzero");
    const ComplexPolynomial pi = ComplexPolynomial::from_roots(nodes);
    ComplexPolynomial q = pi;
    ComplexPolynomial d = pi;
    Complex scale = 1.0;
    for (std::size_t k = 1; k <= nodes.size(); ++k)
    {
        d = d.derivative();
        scale /= c;
        q += scale * d;
    }
    return q;
}

GeneralizedSolution interpolate_constant(Complex c, std::span<const Complex> nodes,
                                         const GeneralizedOptions& opts)
{
    require(!nodes.empty(), ErrorKind::precondition, "interpolate_constant: need >= 1 node");
    for (std::size_t j = 0; j < nodes.size(); ++j)
        for (std::size_t k = 0; k < j; ++k)
            require(nodes[j] != nodes[k], ErrorKind::precondition,
                    "interpolate_constant: nodes must be distinct");
    GeneralizedSolution s;
    s.q = constant_generating_polynomial(c, nodes);
    s.node_status = classify_nodes(s.q, nodes, opts.node_tol);
    s.spf = from_polynomial(s.q, opts.roots);
    return s;
}

std::vector<double> chebyshev_nodes(std::size_t n)
{
    std::vector<double> t(n);
    for (std::size_t k = 1; k <= n; ++k)
        t[n - k] = std::cos((2.0 * static_cast<double>(k) - 1.0) * std::numbers::pi /
                            (2.0 * static_cast<double>(n)));
    return t;
}

} // namespace spfkit
