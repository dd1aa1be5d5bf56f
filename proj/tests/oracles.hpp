#pragma once

// Brute-force time integration of the master equation, written directly on
// 3x3 matrices without any of the library's superoperator machinery. Used as
// an independent reference for the steady-state and linear-response solvers.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using cd = std::complex<double>;
using M3 = Eigen::Matrix3cd;
using V3 = Eigen::Vector3cd;

struct Rates {
    double gamma0 = 0.0;
    double gamma_t = 0.0;
    double gamma_r = 0.0;
    double optical = 0.0;  // decay of rho_{e,g}
};

struct Field {
    double omega_c = 0.0;
    double omega_p = 0.0;
    double delta_opt = 0.0;
    double delta_raman = 0.0;
    double alpha = 0.0;
    double beta = 1.0;
};

inline V3 coupled(const Field& f) { return V3(f.beta, -f.alpha, 0.0); }
inline V3 uncoupled(const Field& f) { return V3(f.alpha, f.beta, 0.0); }
inline V3 excited() { return V3(0.0, 0.0, 1.0); }

// Relaxation for a unit-trace rho, affine form: ground populations relax to
// 1/2 at gamma_t and are fed by half the spontaneous decay.
inline M3 relax(const Rates& r, const M3& rho) {
    M3 d = M3::Zero();
    const cd ee = rho(2, 2);
    for (int g = 0; g < 2; ++g) {
        d(g, g) = 0.5 * r.gamma0 * ee - r.gamma_t * rho(g, g) + 0.5 * r.gamma_t;
        d(2, g) = -r.optical * rho(2, g);
        d(g, 2) = -r.optical * rho(g, 2);
    }
    d(0, 1) = -r.gamma_r * rho(0, 1);
    d(1, 0) = -r.gamma_r * rho(1, 0);
    d(2, 2) = -(r.gamma0 + r.gamma_t) * ee;
    return d;
}

// Static frame: coupling and probe both time independent, Raman detuning on
// the probe-coupled state.
inline M3 static_hamiltonian(const Field& f) {
    const V3 c = coupled(f), nc = uncoupled(f), e = excited();
    M3 h = -f.delta_opt * e * e.adjoint() + f.delta_raman * nc * nc.adjoint();
    h += 0.5 * f.omega_c * (e * c.adjoint() + c * e.adjoint());
    h += 0.5 * f.omega_p * (e * nc.adjoint() + nc * e.adjoint());
    return h;
}

// Coupling frame: the probe term carries e^{-i delta t}.
inline M3 modulated_hamiltonian(const Field& f, double t) {
    const V3 c = coupled(f), nc = uncoupled(f), e = excited();
    M3 h = -f.delta_opt * e * e.adjoint();
    h += 0.5 * f.omega_c * (e * c.adjoint() + c * e.adjoint());
    const cd phase = std::exp(cd(0.0, -f.delta_raman * t));
    const M3 raise = e * nc.adjoint();
    h += 0.5 * f.omega_p * (phase * raise + std::conj(phase) * raise.adjoint());
    return h;
}

using Rhs = std::function<M3(double, const M3&)>;

inline M3 rk4_step(const Rhs& f, double t, const M3& y, double dt) {
    const M3 k1 = f(t, y);
    const M3 k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1);
    const M3 k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2);
    const M3 k4 = f(t + dt, y + dt * k3);
    return y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

inline M3 mixed_ground() {
    M3 rho = M3::Zero();
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.5;
    return rho;
}

// Integrates the static problem from the ground-state mixture for `duration`.
inline M3 integrate_static(const Field& f, const Rates& r, double duration, double dt) {
    const M3 h = static_hamiltonian(f);
    const Rhs rhs = [&](double, const M3& rho) -> M3 {
        return cd(0.0, -1.0) * (h * rho - rho * h) + relax(r, rho);
    };
    M3 rho = mixed_ground();
    const long steps = std::lround(duration / dt);
    for (long n = 0; n < steps; ++n) rho = rk4_step(rhs, n * dt, rho, dt);
    return rho;
}

// Full time-dependent run with a weak modulated probe. After `settle`
// seconds, <e|rho|NC> e^{i delta t} is averaged (trapezoid) over `periods`
// whole periods of the Raman beat, or over `settle` again when delta = 0.
// Returns that average divided by Omega_P.
inline cd demodulated_coherence(const Field& f, const Rates& r, double settle, int periods,
                                int steps_per_period) {
    const Rhs rhs = [&](double t, const M3& rho) -> M3 {
        const M3 h = modulated_hamiltonian(f, t);
        return cd(0.0, -1.0) * (h * rho - rho * h) + relax(r, rho);
    };
    const double window = f.delta_raman == 0.0
                              ? settle
                              : periods * 2.0 * 3.14159265358979323846 / std::abs(f.delta_raman);
    const long window_steps = long(periods) * steps_per_period;
    const double dt = window / static_cast<double>(window_steps);
    const long settle_steps = std::lround(settle / dt);

    const V3 nc = uncoupled(f), e = excited();
    M3 rho = mixed_ground();
    long n = 0;
    for (; n < settle_steps; ++n) rho = rk4_step(rhs, n * dt, rho, dt);

    const auto sample = [&](long k, const M3& m) {
        return e.dot(m * nc) * std::exp(cd(0.0, f.delta_raman * k * dt));
    };
    cd sum = 0.5 * sample(n, rho);
    for (long k = 0; k < window_steps; ++k, ++n) {
        rho = rk4_step(rhs, n * dt, rho, dt);
        sum += (k + 1 == window_steps ? 0.5 : 1.0) * sample(n + 1, rho);
    }
    return sum / static_cast<double>(window_steps) / f.omega_p;
}

}  // namespace oracle
