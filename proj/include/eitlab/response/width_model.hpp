#pragma once

#include "eitlab/core/types.hpp"

namespace eitlab::response {

// Inputs of the EIT width law, all in rad/s.
struct WidthModel {
    double gamma_r = 0.0;
    double omega_c = 0.0;
    double w_eff = 0.0;
    double gamma_opt = 0.0;

    static WidthModel from(const core::DriveParameters& drive,
                           const core::RelaxationParameters& relax) {
        return {relax.gamma_r, drive.omega_c, relax.w_eff, relax.gamma_opt};
    }
};

// FWHM of the transparency window in Hz:
//   (2 Gamma_R + Omega_C^2 / (2W + Gamma)) / 2pi
double width_model_fwhm(const WidthModel& model);

}  // namespace eitlab::response
