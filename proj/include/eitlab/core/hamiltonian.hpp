#pragma once

#include "eitlab/core/types.hpp"

namespace eitlab::core {

// Rotating-wave Hamiltonian (hbar = 1, rad/s) in storage order, written in
// the frame that co-rotates with the coupling field on |e> and with the
// probe-coupling beat on the probe-coupled ground state:
//
//   H = -Delta |e><e| + delta |NC><NC|
//       + (Omega_C/2)(|e><C| + h.c.) + (Omega_P/2)(|e><NC| + h.c.)
//
// with |C> = beta|-1> - alpha|+1> and |NC> = alpha|-1> + beta|+1>, so the
// probe is detuned by Delta + delta from |NC> -> |e>. The coupling term
// annihilates |NC> for every theta.
Matrix3c build_hamiltonian(const DriveParameters& drive, const PolarizationBasis& basis);

// Coupling field alone: omega_p and delta_raman are ignored.
Matrix3c coupling_hamiltonian(const DriveParameters& drive, const PolarizationBasis& basis);

// Raising part of the probe coupling per unit Rabi frequency, (1/2)|e><NC|.
// The probe enters as Omega_P (V e^{-i delta t} + V^dagger e^{+i delta t}).
Matrix3c probe_raising_operator(const PolarizationBasis& basis);

}  // namespace eitlab::core
