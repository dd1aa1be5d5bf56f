#include "eitlab/core/susceptibility.hpp"

#include "eitlab/core/hamiltonian.hpp"
#include "eitlab/core/relaxation.hpp"
#include "eitlab/core/steady_state.hpp"
#include "eitlab/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace eitlab::core {

namespace {

constexpr double kWeakProbeRatio = 0.1;

void check_weak_probe(const DriveParameters& drive) {
    if (drive.omega_p > 0.0 && drive.omega_p > kWeakProbeRatio * drive.omega_c) {
        throw DomainError("linear response needs omega_p <= omega_c / 10");
    }
}

}  // namespace

LinearResponse::LinearResponse(const DriveParameters& drive, const PolarizationBasis& basis,
                               const RelaxationParameters& relax) {
    drive.validate();
    relax.validate();
    check_weak_probe(drive);

    const double optical = relax.effective_optical_decay();
    if (!(optical > 0.0)) {
        throw NumericalSingularity("optical coherence decay W + Gamma/2 must be positive");
    }
    normalization_ = 4.0 * optical;

    const Liouvillian l0 =
        Liouvillian::from_hamiltonian(coupling_hamiltonian(drive, basis)) + build_relaxation(relax);
    rho0_ = steady_state(l0);
    generator_ = l0.matrix();

    const Matrix3c v = probe_raising_operator(basis);
    const Matrix3c& rho0 = rho0_.matrix();
    source_ = vectorize(complex(0.0, 1.0) * (v * rho0 - rho0 * v));
    probe_ground_ = basis.uncoupled_state();
}

complex LinearResponse::chi(double delta_raman) const {
    if (!std::isfinite(delta_raman)) {
        throw DomainError("Raman detuning must be finite");
    }
    Matrix9c system = generator_;
    system.diagonal().array() += complex(0.0, delta_raman);
    Vector9c rhs = source_;

    // The population rows are dependent up to i*delta*Tr; pin Tr rho1 = 0.
    const double scale = std::max(1.0, generator_.cwiseAbs().maxCoeff());
    system.row(0).setZero();
    for (int k = 0; k < 3; ++k) {
        system(0, vec_index(k, k)) = scale;
    }
    rhs(0) = 0.0;

    const Eigen::FullPivLU<Matrix9c> lu(system);
    if (!lu.isInvertible()) {
        throw NumericalSingularity("first-order sideband system is singular");
    }
    const Matrix3c rho1 = unvectorize(lu.solve(rhs));

    complex coherence = 0.0;
    for (int g : {kMinusOne, kPlusOne}) {
        coherence += rho1(kExcited, g) * probe_ground_(g);
    }
    const complex chi_value = -normalization_ * coherence;
    if (!std::isfinite(chi_value.real()) || !std::isfinite(chi_value.imag())) {
        throw NumericalSingularity("non-finite susceptibility");
    }
    return chi_value;
}

complex linear_response_chi(const DriveParameters& drive, const PolarizationBasis& basis,
                            const RelaxationParameters& relax) {
    return LinearResponse(drive, basis, relax).chi(drive.delta_raman);
}

}  // namespace eitlab::core
