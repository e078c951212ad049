#ifndef SPFKIT_LINALG_HPP
#define SPFKIT_LINALG_HPP

#include <Eigen/Dense>

#include "spfkit/polynomial.hpp"

namespace spfkit
{

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

///
/// Orthonormal basis of the numerical nullspace of A.
///
/// Singular values below tol * sigma_max are treated as zero, so every basis
/// vector v satisfies |Av| <= tol |A| |v|. Returns an empty basis when A has
/// full column rank within tol.
///
std::vector<CVector> nullspace(const ComplexMatrix& a, double tol = 1e-10);

inline CVector to_cvector(const ComplexVector& v)
{
    return CVector(v.data(), v.data() + v.size());
}

inline ComplexVector to_eigen(std::span<const Complex> v)
{
    ComplexVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

} // namespace spfkit

#endif
