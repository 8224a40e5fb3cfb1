#include "zs/lapack.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <string>

#include "zs/errors.hpp"

namespace zs::lapack {

namespace {
[[noreturn]] void fail(const char* routine, int info) {
    throw numerical_error(std::string(routine) + " failed, info=" + std::to_string(info));
}
} // namespace

void zgeev(Eigen::MatrixXcd& a, Eigen::VectorXcd& values, Eigen::MatrixXcd* vectors) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    values.resize(n);
    lapack_int info;
    if (vectors) {
        vectors->resize(n, n);
        info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, a.data(), n, values.data(),
                             nullptr, 1, vectors->data(), n);
    } else {
        info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, values.data(),
                             nullptr, 1, nullptr, 1);
    }
    if (info != 0) fail("zgeev", info);
}

void zheev(Eigen::MatrixXcd& a, Eigen::VectorXd& values, bool vectors) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    values.resize(n);
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n,
                                     a.data(), n, values.data());
    if (info != 0) fail("zheevd", info);
}

void dsyev(Eigen::MatrixXd& a, Eigen::VectorXd& values) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    values.resize(n);
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, values.data());
    if (info != 0) fail("dsyevd", info);
}

} // namespace zs::lapack
