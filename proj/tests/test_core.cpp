#include "oracles.hpp"

#include "eitlab/core/basis.hpp"
#include "eitlab/core/hamiltonian.hpp"
#include "eitlab/core/relaxation.hpp"
#include "eitlab/core/steady_state.hpp"
#include "eitlab/core/susceptibility.hpp"
#include "eitlab/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace eitlab;
using namespace eitlab::core;

namespace {

constexpr double kPi = std::numbers::pi;

RelaxationParameters isotropic(double gamma_r_hz, double w_hz = 0.5e9, double gamma_hz = 1.6e6) {
    RelaxationParameters r;
    r.gamma_r = hz_to_rad(gamma_r_hz);
    r.gamma_t = r.gamma_r;
    r.gamma_opt = hz_to_rad(gamma_hz);
    r.gamma0 = r.gamma_opt;
    r.w_eff = hz_to_rad(w_hz);
    return r;
}

DriveParameters coupling(double omega_c_hz, double delta_opt_hz = 0.0) {
    DriveParameters d;
    d.omega_c = hz_to_rad(omega_c_hz);
    d.delta_opt = hz_to_rad(delta_opt_hz);
    return d;
}

Matrix3c random_density(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    Matrix3c a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = complex(n(rng), n(rng));
    Matrix3c rho = a * a.adjoint();
    return rho / rho.trace();
}

oracle::Rates oracle_rates(const RelaxationParameters& r) {
    return {r.gamma0, r.gamma_t, r.gamma_r, r.effective_optical_decay()};
}

oracle::Field oracle_field(const DriveParameters& d, const PolarizationBasis& b) {
    return {d.omega_c, d.omega_p, d.delta_opt, d.delta_raman, b.alpha(), b.beta()};
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("basis coefficients stay normalized") {
    for (double theta : {-kPi / 4, -0.5126, -0.2778, 0.0, 0.3, kPi / 4}) {
        const PolarizationBasis b = make_basis(theta);
        CHECK(b.alpha() * b.alpha() + b.beta() * b.beta() == doctest::Approx(1.0).epsilon(1e-15));
        const Matrix3c u = b.to_cpt_basis();
        CHECK((u.adjoint() * u - Matrix3c::Identity()).norm() < 1e-15);
        CHECK(std::abs(b.coupled_state().dot(b.uncoupled_state())) < 1e-16);
    }
    CHECK(make_basis(kPi / 4).alpha() == doctest::Approx(0.0));
    CHECK(make_basis(0.0).alpha() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("theta outside the quarter-wave range is rejected") {
    CHECK_THROWS_AS(make_basis(2.0), DomainError);
    CHECK_THROWS_AS(make_basis(-kPi / 4 - 1e-9), DomainError);
    CHECK_THROWS_AS(make_basis(std::nan("")), DomainError);
    CHECK_NOTHROW(make_basis(-kPi / 4));
}

TEST_CASE("theta_for_alpha inverts alpha") {
    for (double a : {0.0, 0.26, 0.5, 0.7071, 0.87, 0.97, 1.0}) {
        CHECK(make_basis(theta_for_alpha(a)).alpha() == doctest::Approx(a).epsilon(1e-14));
    }
    CHECK_THROWS_AS(theta_for_alpha(1.2), DomainError);
}

TEST_CASE("vectorization is column stacked") {
    Matrix3c m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = complex(i, 10 * j);
    const Vector9c v = vectorize(m);
    CHECK(v(vec_index(2, 1)) == complex(2, 10));
    CHECK(v(5) == m(2, 1));
    CHECK(unvectorize(v) == m);
}

TEST_CASE("coherent Liouvillian reproduces -i[H, rho]") {
    std::mt19937_64 rng(7);
    const Matrix3c rho = random_density(rng);
    Matrix3c h = random_density(rng) * 3.0;
    const Liouvillian l = Liouvillian::from_hamiltonian(h);
    const Matrix3c expected = complex(0, -1) * (h * rho - rho * h);
    CHECK((l.apply(rho) - expected).norm() < 1e-14);
}

TEST_CASE("hamiltonian is hermitian and the coupling field leaves NC dark") {
    DriveParameters d = coupling(150e3, 40e3);
    d.omega_p = hz_to_rad(5e3);
    d.delta_raman = hz_to_rad(3e3);
    for (double theta : {kPi / 4, 0.1, -0.5}) {
        const PolarizationBasis b = make_basis(theta);
        const Matrix3c h = build_hamiltonian(d, b);
        CHECK((h - h.adjoint()).norm() < 1e-9);
        const Matrix3c hc = coupling_hamiltonian(d, b);
        CHECK((hc * b.uncoupled_state()).norm() < 1e-9);
        const Matrix3c ref = oracle::static_hamiltonian(oracle_field(d, b));
        CHECK((h - ref).norm() < 1e-9 * ref.norm());
    }
}

TEST_CASE("leg amplitudes of the coupling field") {
    const DriveParameters d = coupling(100e3);
    const double half = 0.5 * d.omega_c;
    const Matrix3c circ = build_hamiltonian(d, make_basis(kPi / 4));
    CHECK(std::abs(circ(kExcited, kMinusOne) - half) < 1e-9);
    CHECK(std::abs(circ(kExcited, kPlusOne)) < 1e-9);
    const Matrix3c lin = build_hamiltonian(d, make_basis(0.0));
    CHECK(lin(kExcited, kMinusOne).real() == doctest::Approx(half / std::sqrt(2.0)));
    CHECK(lin(kExcited, kPlusOne).real() == doctest::Approx(-half / std::sqrt(2.0)));
}

TEST_CASE("circular basis rotation is the identity relabeling") {
    RelaxationParameters r = isotropic(5e3);
    r.gamma_t = hz_to_rad(2e3);
    const RotatedRelaxation rot = rotate_relaxation_to_cpt_basis(r, make_basis(kPi / 4));
    CHECK(std::abs(rot.self_coeff + r.gamma_r) < 1e-12 * r.gamma_r);
    CHECK(std::abs(rot.population_difference_coeff) < 1e-12 * r.gamma_r);
}

TEST_CASE("relaxation alone relaxes to the unpolarized ground state") {
    const Liouvillian l = build_relaxation(isotropic(5e3));
    const DensityMatrix rho = steady_state(l);
    Matrix3c expected = Matrix3c::Zero();
    expected(0, 0) = expected(1, 1) = 0.5;
    CHECK((rho.matrix() - expected).norm() < 1e-12);
}

TEST_CASE("without ground relaxation the coupling pumps everything into the dark state") {
    RelaxationParameters r = isotropic(0.0);
    r.gamma_t = 0.0;
    const PolarizationBasis b = make_basis(kPi / 4);
    const Liouvillian l =
        Liouvillian::from_hamiltonian(build_hamiltonian(coupling(200e3), b)) + build_relaxation(r);
    const DensityMatrix rho = steady_state(l);
    CHECK(std::abs(rho(kPlusOne, kPlusOne) - 1.0) < 1e-10);
    CHECK(rho.is_physical());
}

TEST_CASE("relaxation preserves trace and hermiticity") {
    RelaxationParameters r = isotropic(5e3);
    r.gamma_t = hz_to_rad(2e3);
    const Liouvillian l = build_relaxation(r);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 5; ++k) {
        const Matrix3c rho = random_density(rng);
        const Matrix3c d = l.apply(rho);
        CHECK(std::abs(d.trace()) < 1e-9);
        CHECK((d - d.adjoint()).norm() < 1e-9);
        CHECK((d - oracle::relax(oracle_rates(r), rho)).norm() < 1e-9 * d.norm());
    }
}

TEST_CASE("rotated relaxation matches a direct change of basis") {
    std::mt19937_64 rng(11);
    RelaxationParameters r = isotropic(5e3);
    r.gamma_t = hz_to_rad(2e3);
    for (double theta : {kPi / 4, 0.4, 0.0, -0.2778, -kPi / 4}) {
        const PolarizationBasis b = make_basis(theta);
        const RotatedRelaxation rot = rotate_relaxation_to_cpt_basis(r, b);
        CHECK(rot.expansion_residual < 1e-10 * r.gamma_opt);
        CHECK(std::abs(rot.self_coeff + r.gamma_r) < 1e-12 * r.gamma_r);
        const double ab = b.alpha() * b.beta();
        CHECK(std::abs(rot.population_difference_coeff - ab * (r.gamma_t - r.gamma_r)) <
              1e-12 * r.gamma_r);

        const Matrix9c s = rotated_relaxation(r, b);
        const Matrix3c u = b.to_cpt_basis();
        for (int k = 0; k < 3; ++k) {
            const Matrix3c rho = random_density(rng);
            const Matrix3c drho = oracle::relax(oracle_rates(r), rho);
            const complex direct = b.coupled_state().dot(drho * b.uncoupled_state());
            const complex rho_cn = b.coupled_state().dot(rho * b.uncoupled_state());
            const complex expanded = rot.self_coeff * rho_cn +
                                     rot.population_difference_coeff * (rho(1, 1) - rho(0, 0));
            CHECK(std::abs(direct - expanded) < 1e-9 * std::abs(direct) + 1e-6);

            const Vector9c rotated = s * vectorize(u.adjoint() * rho * u);
            const Matrix3c back = u * unvectorize(rotated) * u.adjoint();
            CHECK((back - drho).norm() < 1e-9 * drho.norm());
        }
    }
}

TEST_CASE("isotropic relaxation has no population coupling in any basis") {
    const RelaxationParameters r = isotropic(4.6e3);
    for (double theta : {kPi / 4, 0.2, 0.0, -0.6}) {
        const RotatedRelaxation rot = rotate_relaxation_to_cpt_basis(r, make_basis(theta));
        CHECK(std::abs(rot.population_difference_coeff) < 1e-12 * r.gamma_r);
    }
}

TEST_CASE("steady state solves L rho = 0 and is physical") {
    DriveParameters d = coupling(300e3, 80e3);
    d.omega_p = hz_to_rad(20e3);
    d.delta_raman = hz_to_rad(2e3);
    const RelaxationParameters r = isotropic(5e3);
    const PolarizationBasis b = make_basis(0.3);
    const Liouvillian l = Liouvillian::from_hamiltonian(build_hamiltonian(d, b)) + build_relaxation(r);
    CHECK(null_space_dimension(l) == 1);
    const DensityMatrix rho = steady_state(l);
    CHECK(rho.is_physical());
    CHECK(relative_residual(l, rho) < 1e-13);
}

TEST_CASE("steady state agrees with long-time integration") {
    DriveParameters d = coupling(200e3, 50e3);
    d.omega_p = hz_to_rad(20e3);
    d.delta_raman = hz_to_rad(3e3);
    RelaxationParameters r = isotropic(20e3, 0.0);
    const PolarizationBasis b = make_basis(0.2);
    const Liouvillian l = Liouvillian::from_hamiltonian(build_hamiltonian(d, b)) + build_relaxation(r);
    const DensityMatrix rho = steady_state(l);
    const oracle::M3 ref =
        oracle::integrate_static(oracle_field(d, b), oracle_rates(r), 4e-4, 1e-8);
    CHECK((rho.matrix() - ref).norm() < 1e-8);
}

TEST_CASE("degenerate steady states are reported") {
    const Liouvillian zero;
    CHECK_THROWS_AS(steady_state(zero), DegenerateSteadyState);
    try {
        steady_state(zero);
    } catch (const DegenerateSteadyState& e) {
        CHECK(e.null_dimension() == 9);
    }
    // Ground relaxation switched off: the dark state and the bright one are
    // both stationary under coherent driving alone.
    RelaxationParameters r = isotropic(0.0);
    r.gamma_t = 0.0;
    r.gamma0 = 0.0;
    r.gamma_opt = 0.0;
    r.w_eff = 0.0;
    const Liouvillian l =
        Liouvillian::from_hamiltonian(build_hamiltonian(coupling(1e5), make_basis(0.0))) +
        build_relaxation(r);
    CHECK_THROWS_AS(steady_state(l), DegenerateSteadyState);
}

TEST_CASE("bare line is a unit-height Lorentzian") {
    const RelaxationParameters r = isotropic(5e3, 0.1e9);
    const double g = r.effective_optical_decay();
    const LinearResponse resp(coupling(0.0), make_basis(0.0), r);
    CHECK(resp.chi(0.0).imag() == doctest::Approx(1.0).epsilon(1e-12));
    for (double x : {-2.0, -0.5, 0.3, 1.0, 5.0}) {
        const complex c = resp.chi(x * g);
        CHECK(c.imag() == doctest::Approx(1.0 / (1.0 + x * x)).epsilon(1e-10));
        CHECK(std::abs(c.real()) == doctest::Approx(std::abs(x) / (1.0 + x * x)).epsilon(1e-10));
    }
}

TEST_CASE("probe detuning is the sum of optical and Raman detunings") {
    const RelaxationParameters r = isotropic(5e3, 0.1e9);
    const PolarizationBasis b = make_basis(0.1);
    const complex a = LinearResponse(coupling(0.0, 40e6), b, r).chi(hz_to_rad(10e6));
    const complex c = LinearResponse(coupling(0.0, 0.0), b, r).chi(hz_to_rad(50e6));
    CHECK(std::abs(a - c) < 1e-12);
}

TEST_CASE("resonant EIT window is symmetric in delta") {
    const LinearResponse resp(coupling(250e3), make_basis(0.3), isotropic(5e3));
    for (double dhz : {1e3, 7e3, 40e3}) {
        const complex p = resp.chi(hz_to_rad(dhz)), m = resp.chi(hz_to_rad(-dhz));
        CHECK(p.imag() == doctest::Approx(m.imag()).epsilon(1e-10));
        CHECK(p.real() == doctest::Approx(-m.real()).epsilon(1e-10));
    }
    CHECK(resp.chi(0.0).imag() < resp.chi(hz_to_rad(50e3)).imag());
}

TEST_CASE("susceptibility is basis independent for isotropic ground relaxation") {
    const RelaxationParameters r = isotropic(5e3);
    const DriveParameters d = coupling(400e3, 30e6);
    const LinearResponse ref(d, make_basis(kPi / 4), r);
    for (double theta : {-0.2778, -0.5126, 0.0, 0.6, -kPi / 4}) {
        const LinearResponse resp(d, make_basis(theta), r);
        for (double dhz : {-20e3, 0.0, 3e3, 60e3}) {
            const complex a = resp.chi(hz_to_rad(dhz)), c = ref.chi(hz_to_rad(dhz));
            CHECK(std::abs(a - c) < 1e-11 * std::abs(c));
        }
    }
}

TEST_CASE("anisotropic ground relaxation breaks basis independence") {
    RelaxationParameters r = isotropic(5e3);
    r.gamma_t = hz_to_rad(1e3);
    const DriveParameters d = coupling(400e3);
    const complex a = LinearResponse(d, make_basis(kPi / 4), r).chi(0.0);
    const complex c = LinearResponse(d, make_basis(0.0), r).chi(0.0);
    CHECK(std::abs(a - c) > 1e-3 * std::abs(a));
}

TEST_CASE("strong probe is refused") {
    DriveParameters d = coupling(100e3);
    d.omega_p = hz_to_rad(20e3);
    CHECK_THROWS_AS(LinearResponse(d, make_basis(0.0), isotropic(5e3)), DomainError);
    d.omega_p = hz_to_rad(5e3);
    CHECK_NOTHROW(LinearResponse(d, make_basis(0.0), isotropic(5e3)));
}

TEST_CASE("zeroth-order state pumps atoms into the uncoupled state") {
    const PolarizationBasis b = make_basis(-0.2778);
    const LinearResponse resp(coupling(300e3), b, isotropic(5e3));
    const DensityMatrix& rho0 = resp.zeroth_order();
    CHECK(rho0.is_physical());
    const double nc = rho0.element(b.uncoupled_state(), b.uncoupled_state()).real();
    const double c = rho0.element(b.coupled_state(), b.coupled_state()).real();
    CHECK(nc > 0.5);
    CHECK(nc > c);
}

TEST_CASE("linear response matches a demodulated weak-probe simulation") {
    DriveParameters d;
    d.omega_c = hz_to_rad(190e3);
    d.omega_p = d.omega_c / 100.0;
    d.delta_raman = hz_to_rad(10e3);
    const RelaxationParameters r = isotropic(5e3, 1e6);
    const PolarizationBasis b = make_basis(0.0);
    const complex chi = LinearResponse(d, b, r).chi(d.delta_raman);
    const oracle::cd c =
        oracle::demodulated_coherence(oracle_field(d, b), oracle_rates(r), 4e-4, 2, 20000);
    const complex chi_sim = -4.0 * r.effective_optical_decay() * c;
    CHECK(chi_sim.imag() == doctest::Approx(chi.imag()).epsilon(0.01));
    CHECK(chi_sim.real() == doctest::Approx(chi.real()).epsilon(0.02));
}

}  // TEST_SUITE
