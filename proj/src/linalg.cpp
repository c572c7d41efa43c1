#include "slocc/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace slocc::linalg {

Complex determinant(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    CMatrix lu = m;
    Complex det = 1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        double best = std::abs(lu(k, k));
        for (Eigen::Index r = k + 1; r < n; ++r) {
            if (std::abs(lu(r, k)) > best) {
                best = std::abs(lu(r, k));
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            lu.row(k).swap(lu.row(pivot));
            det = -det;
        }
        det *= lu(k, k);
        for (Eigen::Index r = k + 1; r < n; ++r) {
            const Complex factor = lu(r, k) / lu(k, k);
            for (Eigen::Index c = k + 1; c < n; ++c) lu(r, c) -= factor * lu(k, c);
        }
    }
    return det;
}

Complex determinant4_cofactor(const CMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("determinant4_cofactor needs a 4x4 matrix");
    // 2x2 minors of the top two rows against the bottom two rows.
    auto minor2 = [&](Eigen::Index r0, Eigen::Index r1, Eigen::Index c0, Eigen::Index c1) {
        return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    };
    return minor2(0, 1, 0, 1) * minor2(2, 3, 2, 3) - minor2(0, 1, 0, 2) * minor2(2, 3, 1, 3) +
           minor2(0, 1, 0, 3) * minor2(2, 3, 1, 2) + minor2(0, 1, 1, 2) * minor2(2, 3, 0, 3) -
           minor2(0, 1, 1, 3) * minor2(2, 3, 0, 2) + minor2(0, 1, 2, 3) * minor2(2, 3, 0, 1);
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
    return solver.eigenvalues();
}

int numerical_rank(const CMatrix& m, double rel_threshold) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const Eigen::VectorXd& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > rel_threshold * s(0)) ++rank;
    }
    return rank;
}

double unitarity_residual(const CMatrix& m) {
    return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace slocc::linalg
