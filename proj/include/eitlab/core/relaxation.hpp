#pragma once

#include "eitlab/core/types.hpp"

namespace eitlab::core {

// Relaxation part of the Liouvillian in the Zeeman storage basis:
//
//   d rho_{+-1,+-1}/dt  = (G0/2) rho_ee - Gt rho_{+-1,+-1} + (Gt/2) Tr rho
//   d rho_{-1,+1}/dt    = -GR rho_{-1,+1}
//   d rho_ee/dt         = -(G0 + Gt) rho_ee
//   d rho_{e,+-1}/dt    = -(W + G/2) rho_{e,+-1}
//
// On the unit-trace manifold the ground terms equal Gt (1/2 - rho_gg); the
// Tr rho form keeps the generator linear. Transit also removes excited
// atoms, so the generator is trace preserving.
Liouvillian build_relaxation(const RelaxationParameters& relax);

// Relaxation superoperator acting on vec(U^dagger rho U), where U maps the
// storage basis to {|C>, |NC>, |e>}.
Matrix9c rotated_relaxation(const RelaxationParameters& relax, const PolarizationBasis& basis);

// Unique expansion
//   d rho_{C,NC}/dt |relax = self_coeff * rho_{C,NC}
//                          + population_difference_coeff * (rho_{+1,+1} - rho_{-1,-1})
// read off the conjugated superoperator. expansion_residual is the norm of
// whatever part of the rotated row the two functionals fail to span; it is
// zero up to rounding for every theta.
struct RotatedRelaxation {
    complex self_coeff;
    complex population_difference_coeff;
    double expansion_residual = 0.0;
};

RotatedRelaxation rotate_relaxation_to_cpt_basis(const RelaxationParameters& relax,
                                                 const PolarizationBasis& basis);

}  // namespace eitlab::core
