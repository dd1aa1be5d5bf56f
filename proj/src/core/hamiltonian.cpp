#include "eitlab/core/hamiltonian.hpp"

namespace eitlab::core {

namespace {

Vector3c excited_state() { return Vector3c(0.0, 0.0, 1.0); }

// |e><g| + |g><e| for a real ground superposition g.
Matrix3c optical_leg(const Vector3c& ground) {
    const Vector3c e = excited_state();
    return e * ground.adjoint() + ground * e.adjoint();
}

}  // namespace

Matrix3c coupling_hamiltonian(const DriveParameters& drive, const PolarizationBasis& basis) {
    drive.validate();
    Matrix3c h = Matrix3c::Zero();
    h(kExcited, kExcited) = -drive.delta_opt;
    h += 0.5 * drive.omega_c * optical_leg(basis.coupled_state());
    return h;
}

Matrix3c build_hamiltonian(const DriveParameters& drive, const PolarizationBasis& basis) {
    Matrix3c h = coupling_hamiltonian(drive, basis);
    const Vector3c dark = basis.uncoupled_state();
    h += drive.delta_raman * dark * dark.adjoint();
    h += 0.5 * drive.omega_p * optical_leg(dark);
    return h;
}

Matrix3c probe_raising_operator(const PolarizationBasis& basis) {
    return 0.5 * excited_state() * basis.uncoupled_state().adjoint();
}

}  // namespace eitlab::core
