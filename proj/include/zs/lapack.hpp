#pragma once
#include <Eigen/Dense>
#include <complex>

namespace zs::lapack {

// Dense complex general eigenproblem. `a` is destroyed. Right eigenvectors
// returned when `vectors` is non-null (unit 2-norm columns).
void zgeev(Eigen::MatrixXcd& a, Eigen::VectorXcd& values, Eigen::MatrixXcd* vectors);

// Dense complex Hermitian eigenproblem; ascending real eigenvalues.
// When `vectors` is true, `a` holds the orthonormal eigenvectors on return.
void zheev(Eigen::MatrixXcd& a, Eigen::VectorXd& values, bool vectors);

// Dense real symmetric eigenproblem; ascending eigenvalues; `a` destroyed.
void dsyev(Eigen::MatrixXd& a, Eigen::VectorXd& values);

} // namespace zs::lapack
