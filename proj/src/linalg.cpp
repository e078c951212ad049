#include "spfkit/linalg.hpp"

#include "spfkit/error.hpp"

namespace spfkit
{

std::vector<CVector> nullspace(const ComplexMatrix& a, double tol)
{
    require(tol > 0, ErrorKind::precondition, "nullspace: tol must be > 0");
    const Eigen::Index cols = a.cols();
    std::vector<CVector> basis;
    if (cols == 0)
        return basis;
    if (a.rows() == 0)
    {
        for (Eigen::Index j = 0; j < cols; ++j)
        {
            CVector e(static_cast<std::size_t>(cols));
            e[static_cast<std::size_t>(j)] = 1.0;
            basis.push_back(std::move(e));
        }
        return basis;
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double cutoff = tol * (sigma.size() > 0 ? sigma(0) : 0.0);
    Eigen::Index rank = 0;
    while (rank < sigma.size() && sigma(rank) > cutoff)
        ++rank;

    const ComplexMatrix& v = svd.matrixV();
    for (Eigen::Index j = rank; j < cols; ++j)
        basis.push_back(to_cvector(v.col(j)));
    return basis;
}

} // namespace spfkit
