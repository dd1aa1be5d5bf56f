#pragma once

#include "eitlab/core/types.hpp"

namespace eitlab::core {

// Weak-probe susceptibility of the Lambda system, first order in Omega_P.
//
// The coupling field alone fixes the zeroth-order steady state rho0. The
// probe adds Omega_P (V e^{-i delta t} + h.c.) with V = (1/2)|e><NC|, and
// the e^{-i delta t} sideband rho1 of the density matrix solves
//
//   (L0 + i delta) rho1 = i [V, rho0],   Tr rho1 = 0.
//
// The probe response is -<e|rho1|NC>, scaled so that Im chi = 1 on the bare
// line centre (Omega_C = 0, Delta = delta = 0), where it equals
// 1 / (4 (W + Gamma/2)).
//
// Construction does the delta-independent work once; chi() can then be
// evaluated on any number of Raman detunings. Instances are immutable.
class LinearResponse {
public:
    LinearResponse(const DriveParameters& drive, const PolarizationBasis& basis,
                   const RelaxationParameters& relax);

    // Normalized susceptibility at Raman detuning delta_raman (rad/s).
    complex chi(double delta_raman) const;

    const DensityMatrix& zeroth_order() const noexcept { return rho0_; }

private:
    Matrix9c generator_;
    Vector9c source_;
    Vector3c probe_ground_;
    double normalization_;
    DensityMatrix rho0_;
};

// Single-point convenience: chi at drive.delta_raman.
complex linear_response_chi(const DriveParameters& drive, const PolarizationBasis& basis,
                            const RelaxationParameters& relax);

}  // namespace eitlab::core
