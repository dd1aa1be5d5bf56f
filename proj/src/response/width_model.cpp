#include "eitlab/response/width_model.hpp"

#include "eitlab/errors.hpp"

namespace eitlab::response {

double width_model_fwhm(const WidthModel& model) {
    const double denominator = 2.0 * model.w_eff + model.gamma_opt;
    double power_broadening = 0.0;
    if (model.omega_c != 0.0) {
        if (!(denominator > 0.0)) {
            throw DomainError("width law needs 2W + Gamma > 0 when Omega_C > 0");
        }
        power_broadening = model.omega_c * model.omega_c / denominator;
    }
    return core::rad_to_hz(2.0 * model.gamma_r + power_broadening);
}

}  // namespace eitlab::response
