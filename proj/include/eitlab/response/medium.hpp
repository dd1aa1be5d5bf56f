#pragma once

namespace eitlab::response {

// Single-pass thin medium. od0 is the resonant optical depth seen by the
// probe with the coupling field off, so the bare line-centre intensity
// transmission is exp(-od0).
struct MediumParameters {
    double cell_length_m = 0.025;
    double od0 = 0.0;

    // Throws DomainError for transmission outside (0, 1].
    static MediumParameters from_zero_coupling_transmission(double transmission,
                                                            double cell_length_m);

    void validate() const;
};

}  // namespace eitlab::response
