#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numbers>

namespace eitlab::core {

using complex = std::complex<double>;
using Matrix3c = Eigen::Matrix<complex, 3, 3>;
using Vector3c = Eigen::Matrix<complex, 3, 1>;
using Matrix9c = Eigen::Matrix<complex, 9, 9>;
using Vector9c = Eigen::Matrix<complex, 9, 1>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Storage order of the three levels: ground m=-1, ground m=+1, excited.
enum Level : int { kMinusOne = 0, kPlusOne = 1, kExcited = 2 };

inline double hz_to_rad(double hz) { return two_pi * hz; }
inline double rad_to_hz(double rad_per_s) { return rad_per_s / two_pi; }

// Ellipticity of the (mutually orthogonal) coupling and probe polarizations.
// alpha and beta are always derived from theta; they are not independently
// settable, so alpha^2 + beta^2 = 1 holds by construction.
class PolarizationBasis {
public:
    // Throws DomainError unless theta is in [-pi/4, pi/4].
    explicit PolarizationBasis(double theta);

    double theta() const noexcept { return theta_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    // Ground-state superposition coupled to |e> by the coupling field,
    // beta|-1> - alpha|+1>, as a 3-vector in storage order.
    Vector3c coupled_state() const;
    // alpha|-1> + beta|+1>: dark for the coupling field, bright for the probe.
    Vector3c uncoupled_state() const;

    // Columns are the new basis vectors {|C>, |NC>, |e>} in storage order.
    // U^dagger rho U gives rho in the coupled/uncoupled basis.
    Matrix3c to_cpt_basis() const;

private:
    double theta_;
    double alpha_;
    double beta_;
};

// Field parameters in rad/s. The probe sits at optical detuning
// delta_opt + delta_raman.
struct DriveParameters {
    double omega_c = 0.0;
    double omega_p = 0.0;
    double delta_opt = 0.0;
    double delta_raman = 0.0;

    void validate() const;
};

// Decay rates in rad/s. gamma_r is the total Raman-coherence decay
// (transit included); gamma_opt is the homogeneous optical-coherence rate
// that enters the width law as (2W + gamma_opt).
struct RelaxationParameters {
    double gamma0 = 0.0;
    double gamma_t = 0.0;
    double gamma_r = 0.0;
    double gamma_opt = 0.0;
    double w_eff = 0.0;

    // Decay rate actually applied to the optical coherences rho_{e,+-1}.
    double effective_optical_decay() const noexcept { return w_eff + 0.5 * gamma_opt; }

    void validate() const;
};

class DensityMatrix {
public:
    DensityMatrix() : rho_(Matrix3c::Zero()) {}
    explicit DensityMatrix(const Matrix3c& rho) : rho_(rho) {}

    static DensityMatrix from_vector(const Vector9c& v);

    const Matrix3c& matrix() const noexcept { return rho_; }
    complex operator()(int i, int j) const { return rho_(i, j); }

    Vector9c vectorized() const;

    // Element <a|rho|b> for arbitrary (not necessarily storage-basis) states.
    complex element(const Vector3c& bra_state, const Vector3c& ket_state) const;

    double hermiticity_error() const;
    double trace_error() const;
    double min_eigenvalue() const;

    // Hermitian within 1e-12, unit trace within 1e-12, PSD down to -1e-10.
    bool is_physical() const;

private:
    Matrix3c rho_;
};

// Column-stacked vectorization: vec(rho)[i + 3 j] = rho(i, j).
constexpr int vec_index(int row, int col) { return row + 3 * col; }

Vector9c vectorize(const Matrix3c& m);
Matrix3c unvectorize(const Vector9c& v);

// Generator of d vec(rho)/dt, kept as coherent + relaxation parts.
class Liouvillian {
public:
    Liouvillian() : coherent_(Matrix9c::Zero()), relaxation_(Matrix9c::Zero()) {}
    Liouvillian(const Matrix9c& coherent, const Matrix9c& relaxation)
        : coherent_(coherent), relaxation_(relaxation) {}

    // -i[H, .] for a 3x3 Hamiltonian in rad/s.
    static Liouvillian from_hamiltonian(const Matrix3c& hamiltonian);

    const Matrix9c& coherent() const noexcept { return coherent_; }
    const Matrix9c& relaxation() const noexcept { return relaxation_; }
    Matrix9c matrix() const { return coherent_ + relaxation_; }

    Matrix3c apply(const Matrix3c& rho) const;

    Liouvillian operator+(const Liouvillian& other) const {
        return {coherent_ + other.coherent_, relaxation_ + other.relaxation_};
    }

private:
    Matrix9c coherent_;
    Matrix9c relaxation_;
};

}  // namespace eitlab::core
