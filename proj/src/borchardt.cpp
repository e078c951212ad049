#include <cmath>

#include "spfkit/best.hpp"
#include "spfkit/error.hpp"

namespace spfkit
{

Complex permanent(const ComplexMatrix& a)
{
    require(a.rows() == a.cols(), ErrorKind::precondition, "permanent: matrix must be square");
    const auto n = static_cast<std::size_t>(a.rows());
    require(n <= 12, ErrorKind::size_limit, "permanent: n must be <= 12");
    if (n == 0)
        return 1.0;
    // Ryser: perm A = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij.
    Complex total{};
    const std::size_t subsets = std::size_t{1} << n;
    for (std::size_t s = 1; s < subsets; ++s)
    {
        Complex prod = 1.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            Complex row{};
            for (std::size_t j = 0; j < n; ++j)
                if (s & (std::size_t{1} << j))
                    row += a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            prod *= row;
        }
        const int bits = __builtin_popcountll(s);
        total += ((bits % 2 == 0) ? 1.0 : -1.0) * prod;
    }
    return (n % 2 == 0) ? total : -total;
}

Complex cauchy_determinant(std::span<const Complex> x, std::span<const Complex> y)
{
    require(x.size() == y.size(), ErrorKind::precondition,
            "cauchy_determinant: sizes must agree");
    Complex num = 1.0, den = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
        {
            den *= x[i] - y[j];
            if (i < j)
                num *= (x[j] - x[i]) * (y[i] - y[j]);
        }
    return num / den;
}

BorchardtReport borchardt_check(std::span<const Complex> xi, std::span<const Complex> z)
{
    require(xi.size() == z.size() && !xi.empty(), ErrorKind::precondition,
            "borchardt_check: need equally many nodes and poles");
    const auto n = static_cast<Eigen::Index>(xi.size());
    ComplexMatrix c(n, n), c2(n, n);
    for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index j = 0; j < n; ++j)
        {
            const Complex d = xi[static_cast<std::size_t>(l)] - z[static_cast<std::size_t>(j)];
            require(d != Complex{}, ErrorKind::pole_evaluation, "borchardt_check: node equals pole");
            c(l, j) = 1.0 / d;
            c2(l, j) = 1.0 / (d * d);
        }
    BorchardtReport rep;
    rep.det_squared = c2.fullPivLu().determinant();
    rep.det = c.fullPivLu().determinant();
    rep.perm = permanent(c);
    rep.cauchy = cauchy_determinant(xi, z);
    rep.identity_error = std::abs(rep.det_squared - rep.det * rep.perm) / std::abs(rep.det_squared);
    rep.cauchy_error = std::abs(rep.det - rep.cauchy) / std::abs(rep.cauchy);
    return rep;
}

} // namespace spfkit
