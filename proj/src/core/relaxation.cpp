#include "eitlab/core/relaxation.hpp"

#include <Eigen/QR>

namespace eitlab::core {

namespace {

Matrix3c relaxation_action(const RelaxationParameters& relax, const Matrix3c& rho) {
    const double optical = relax.effective_optical_decay();
    const complex trace = rho.trace();
    const complex excited = rho(kExcited, kExcited);

    Matrix3c out = Matrix3c::Zero();
    for (int g : {kMinusOne, kPlusOne}) {
        out(g, g) = 0.5 * relax.gamma0 * excited - relax.gamma_t * rho(g, g) +
                    0.5 * relax.gamma_t * trace;
        out(kExcited, g) = -optical * rho(kExcited, g);
        out(g, kExcited) = -optical * rho(g, kExcited);
    }
    out(kMinusOne, kPlusOne) = -relax.gamma_r * rho(kMinusOne, kPlusOne);
    out(kPlusOne, kMinusOne) = -relax.gamma_r * rho(kPlusOne, kMinusOne);
    out(kExcited, kExcited) = -(relax.gamma0 + relax.gamma_t) * excited;
    return out;
}

// vec(U^dagger rho U) = (U^T kron U^dagger) vec(rho)
Matrix9c conjugation_superoperator(const Matrix3c& u) {
    const Matrix3c ut = u.transpose();
    const Matrix3c ud = u.adjoint();
    Matrix9c s;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
                for (int d = 0; d < 3; ++d) {
                    s(3 * a + c, 3 * b + d) = ut(a, b) * ud(c, d);
                }
            }
        }
    }
    return s;
}

}  // namespace

Liouvillian build_relaxation(const RelaxationParameters& relax) {
    relax.validate();
    Matrix9c r;
    for (int col = 0; col < 3; ++col) {
        for (int row = 0; row < 3; ++row) {
            Matrix3c unit = Matrix3c::Zero();
            unit(row, col) = 1.0;
            r.col(vec_index(row, col)) = vectorize(relaxation_action(relax, unit));
        }
    }
    return {Matrix9c::Zero(), r};
}

Matrix9c rotated_relaxation(const RelaxationParameters& relax, const PolarizationBasis& basis) {
    const Matrix9c r = build_relaxation(relax).relaxation();
    const Matrix9c s = conjugation_superoperator(basis.to_cpt_basis());
    // U is unitary, so the inverse of the conjugation is its adjoint.
    return s * r * s.adjoint();
}

RotatedRelaxation rotate_relaxation_to_cpt_basis(const RelaxationParameters& relax,
                                                 const PolarizationBasis& basis) {
    const Matrix9c rotated = rotated_relaxation(relax, basis);
    const Matrix9c to_rotated = conjugation_superoperator(basis.to_cpt_basis());

    // Row functionals on vec(rho') (rotated coordinates).
    const int cnc = vec_index(0, 1);
    Eigen::Matrix<complex, 1, 9> derivative_row = rotated.row(cnc);
    Eigen::Matrix<complex, 1, 9> coherence_row = Eigen::Matrix<complex, 1, 9>::Zero();
    coherence_row(cnc) = 1.0;
    Eigen::Matrix<complex, 1, 9> population_row_zeeman = Eigen::Matrix<complex, 1, 9>::Zero();
    population_row_zeeman(vec_index(kPlusOne, kPlusOne)) = 1.0;
    population_row_zeeman(vec_index(kMinusOne, kMinusOne)) = -1.0;
    const Eigen::Matrix<complex, 1, 9> population_row =
        population_row_zeeman * to_rotated.adjoint();

    Eigen::Matrix<complex, 9, 2> design;
    design.col(0) = coherence_row.transpose();
    design.col(1) = population_row.transpose();
    const Eigen::Matrix<complex, 9, 1> target = derivative_row.transpose();
    const Eigen::Matrix<complex, 2, 1> coeffs = design.colPivHouseholderQr().solve(target);

    RotatedRelaxation report;
    report.self_coeff = coeffs(0);
    report.population_difference_coeff = coeffs(1);
    report.expansion_residual = (design * coeffs - target).norm();
    return report;
}

}  // namespace eitlab::core
