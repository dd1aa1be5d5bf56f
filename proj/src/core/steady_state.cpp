#include "eitlab/core/steady_state.hpp"

#include "eitlab/errors.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>

namespace eitlab::core {

namespace {

int count_null(const Eigen::Matrix<double, 9, 1>& singular_values) {
    const double cutoff = kNullSpaceTolerance * singular_values(0);
    int n = 0;
    for (int i = 0; i < 9; ++i) {
        if (singular_values(i) <= cutoff) ++n;
    }
    return n;
}

}  // namespace

int null_space_dimension(const Liouvillian& liouvillian) {
    Eigen::JacobiSVD<Matrix9c> svd(liouvillian.matrix());
    return count_null(svd.singularValues());
}

DensityMatrix steady_state(const Liouvillian& liouvillian) {
    Matrix9c l = liouvillian.matrix();
    const int dim = null_space_dimension(liouvillian);
    if (dim != 1) {
        throw DegenerateSteadyState(dim);
    }

    // Trace preservation makes the population rows linearly dependent, so one
    // of them can carry the normalization instead.
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    Vector9c rhs = Vector9c::Zero();
    l.row(0).setZero();
    for (int k = 0; k < 3; ++k) {
        l(0, vec_index(k, k)) = scale;
    }
    rhs(0) = scale;

    const Vector9c solution = l.fullPivLu().solve(rhs);
    Matrix3c rho = unvectorize(solution);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace();
    return DensityMatrix(rho);
}

double relative_residual(const Liouvillian& liouvillian, const DensityMatrix& rho) {
    const Matrix9c l = liouvillian.matrix();
    Eigen::JacobiSVD<Matrix9c> svd(l);
    const double scale = svd.singularValues()(0);
    if (scale == 0.0) return (l * rho.vectorized()).norm();
    return (l * rho.vectorized()).norm() / scale;
}

}  // namespace eitlab::core
