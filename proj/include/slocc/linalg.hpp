#pragma once

#include <Eigen/Dense>

#include "slocc/types.hpp"

namespace slocc::linalg {

/// Determinant by LU factorization with partial pivoting.
Complex determinant(const CMatrix& m);

/// Explicit Laplace expansion of a 4x4 determinant. Cross-check for the
/// Luque-Thibon arrays.
Complex determinant4_cofactor(const CMatrix& m);

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m);

/// Number of singular values above rel_threshold times the largest one.
int numerical_rank(const CMatrix& m, double rel_threshold);

/// Max-abs entry of m^dagger m - 1.
double unitarity_residual(const CMatrix& m);

}  // namespace slocc::linalg
