#include "eitlab/core/types.hpp"

#include "eitlab/errors.hpp"

#include <cmath>
#include <string>

namespace eitlab::core {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

void require_non_negative(double value, const char* name) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(name) + " must be finite and >= 0");
    }
}

}  // namespace

PolarizationBasis::PolarizationBasis(double theta)
    : theta_(theta),
      alpha_(std::sin(kQuarterPi - theta)),
      beta_(std::cos(kQuarterPi - theta)) {
    if (!(theta >= -kQuarterPi && theta <= kQuarterPi)) {
        throw DomainError("ellipticity theta = " + std::to_string(theta) +
                          " rad is outside [-pi/4, pi/4]");
    }
}

Vector3c PolarizationBasis::coupled_state() const {
    return Vector3c(beta_, -alpha_, 0.0);
}

Vector3c PolarizationBasis::uncoupled_state() const {
    return Vector3c(alpha_, beta_, 0.0);
}

Matrix3c PolarizationBasis::to_cpt_basis() const {
    Matrix3c u = Matrix3c::Zero();
    u.col(0) = coupled_state();
    u.col(1) = uncoupled_state();
    u(kExcited, 2) = 1.0;
    return u;
}

void DriveParameters::validate() const {
    require_non_negative(omega_c, "omega_c");
    require_non_negative(omega_p, "omega_p");
    if (!std::isfinite(delta_opt) || !std::isfinite(delta_raman)) {
        throw DomainError("detunings must be finite");
    }
}

void RelaxationParameters::validate() const {
    require_non_negative(gamma0, "gamma0");
    require_non_negative(gamma_t, "gamma_t");
    require_non_negative(gamma_r, "gamma_r");
    require_non_negative(gamma_opt, "gamma_opt");
    require_non_negative(w_eff, "w_eff");
    if (gamma_r > gamma_opt) {
        throw DomainError("gamma_r must not exceed gamma_opt");
    }
}

Vector9c vectorize(const Matrix3c& m) {
    Vector9c v;
    for (int col = 0; col < 3; ++col) {
        for (int row = 0; row < 3; ++row) {
            v(vec_index(row, col)) = m(row, col);
        }
    }
    return v;
}

Matrix3c unvectorize(const Vector9c& v) {
    Matrix3c m;
    for (int col = 0; col < 3; ++col) {
        for (int row = 0; row < 3; ++row) {
            m(row, col) = v(vec_index(row, col));
        }
    }
    return m;
}

DensityMatrix DensityMatrix::from_vector(const Vector9c& v) {
    return DensityMatrix(unvectorize(v));
}

Vector9c DensityMatrix::vectorized() const { return vectorize(rho_); }

complex DensityMatrix::element(const Vector3c& bra_state, const Vector3c& ket_state) const {
    return bra_state.dot(rho_ * ket_state);  // dot() conjugates the left operand
}

double DensityMatrix::hermiticity_error() const {
    return (rho_ - rho_.adjoint()).norm();
}

double DensityMatrix::trace_error() const {
    return std::abs(rho_.trace() - 1.0);
}

double DensityMatrix::min_eigenvalue() const {
    const Matrix3c hermitian = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix3c> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical() const {
    return hermiticity_error() < 1e-12 && trace_error() < 1e-12 && min_eigenvalue() > -1e-10;
}

Liouvillian Liouvillian::from_hamiltonian(const Matrix3c& hamiltonian) {
    // vec(A X B) = (B^T kron A) vec(X); -i(H rho - rho H).
    Matrix9c coherent = Matrix9c::Zero();
    const complex minus_i(0.0, -1.0);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                // (H rho)_{ij} = sum_k H_ik rho_kj
                coherent(vec_index(i, j), vec_index(k, j)) += minus_i * hamiltonian(i, k);
                // (rho H)_{ij} = sum_k rho_ik H_kj
                coherent(vec_index(i, j), vec_index(i, k)) -= minus_i * hamiltonian(k, j);
            }
        }
    }
    return {coherent, Matrix9c::Zero()};
}

Matrix3c Liouvillian::apply(const Matrix3c& rho) const {
    return unvectorize(matrix() * vectorize(rho));
}

}  // namespace eitlab::core
