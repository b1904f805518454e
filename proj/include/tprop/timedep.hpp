#pragma once

#include <functional>

#include "tprop/dynamics.hpp"
#include "tprop/vec3.hpp"

namespace tprop::timedep {

// Mutually orthogonal sinusoidal fields of fixed direction:
// E = E0 sin(omega t + phi) e_x, B = B0 sin(omega t + phi) e_y.
// Carries the particle's charge-to-mass ratio since the generator vectors
// Omega0 = (e/m) B0 e_y and Q0 = (e/m) E0 e_x are what the solutions use.
struct SinusoidalField {
    double E0 = 0.0;        // V/m
    double B0 = 0.0;        // T
    double omega = 0.0;     // rad/s, > 0
    double phi = 0.0;       // rad
    double e_over_m = 0.0;  // C/kg, signed

    SinusoidalField() = default;
    SinusoidalField(double E0_, double B0_, double omega_, double phi_, double e_over_m_)
        : E0(E0_), B0(B0_), omega(omega_), phi(phi_), e_over_m(e_over_m_) {}
    SinusoidalField(double E0_, double B0_, double omega_, double phi_,
                    const dynamics::Particle& p)
        : E0(E0_), B0(B0_), omega(omega_), phi(phi_), e_over_m(p.qm()) {}

    Vec3 omega0_vec() const { return {0.0, e_over_m * B0, 0.0}; }
    Vec3 q0_vec() const { return {e_over_m * E0, 0.0, 0.0}; }
    double zeta() const { return e_over_m * B0 / omega; }  // signed
};

// Integrated rotation vector Phi(t) = (1/omega)[cos(omega t + phi) - cos phi] Omega0.
Vec3 phase_vector(const SinusoidalField& f, double t);

// Velocity for E0 = 0: a single rotation by the accumulated phase
// (the field direction is fixed, so no ordering is needed).
Vec3 oscillating_b_velocity(const SinusoidalField& f, const Vec3& v0, double t);

// Harmonic form of the same velocity for phi = pi/2 and v0 perpendicular to
// the field axis: Bessel-coefficient series truncated at n_max.
// Throws NotPerpendicular.
Vec3 jacobi_anger_velocity(const SinusoidalField& f, const Vec3& v0, double t, int n_max);

// Forced part w(t) of the solution with the electric field on (phi = pi/2),
// evaluated by adaptive quadrature of the rotation-kernel convolution.
Vec3 inhomogeneous_term(const SinusoidalField& f, double t, double quad_tol);

// Double Bessel-series evaluator of the same quantity, used as an independent
// cross-check of the quadrature. The operator-argument Bessel factors reduce
// to real Bessel values on the transverse eigenplane; with k_max around
// |zeta| + 20 the rearrangement agrees with the integral at rounding level.
Vec3 inhomogeneous_term_series(const SinusoidalField& f, double t, int k_max);

// Torque with time-varying direction.
struct TimeTorque {
    std::function<Vec3(double)> omega_of_t;  // rad/s
};

// Velocity for static B and time-dependent E with the particle initially at
// rest: v(t) = c + (n.f) n + n x s, the three kernel convolutions evaluated
// by adaptive quadrature. Q_of_t must vanish for t < 0.
Vec3 resolvent_velocity(const dynamics::Particle& p, const Vec3& B,
                        const std::function<Vec3(double)>& Q_of_t, double t, double quad_tol);

// Antisymmetrized product 2 (t1 x t2) of two torque vectors. Note the
// commutator of the induced operators is Vop(t1 x t2) - half of this value;
// see the unit tests.
Vec3 vop_commutator(const Vec3& t1_vec, const Vec3& t2_vec);

// First Magnus integral: Gamma(t) = int_0^t Omega(tau) dtau (composite Simpson).
Vec3 magnus_gamma(const TimeTorque& tt, double t, int n_quad);

// Second-order correction as the half-sum of the antisymmetrized product:
// Delta(t) = 1/2 int_0^t dt1 int_0^t1 dt2 vop_commutator(Omega(t1), Omega(t2))
//          = int_0^t dt1 int_0^t1 dt2 Omega(t1) x Omega(t2).
Vec3 magnus_delta(const TimeTorque& tt, double t, int n_quad);

// Second-order ordered propagator for dS/dt = -Omega(t) x S: a single
// rotation with torque -Gamma(t) + (1/2) int int Omega(t1) x Omega(t2),
// i.e. -Gamma + Delta/2 (the operator commutator carries half the
// antisymmetrized product). Preserves |s0| exactly for any Omega(t).
Vec3 magnus2_propagate(const TimeTorque& tt, double t, const Vec3& s0, int n_quad);

// Leading adiabatic form (1/6) Omega^2 omega_rot t^3 u of the second-order
// correction for a slowly rotating constant-magnitude torque.
Vec3 adiabatic_delta(double Omega_mag, double omega_rot, double t, const Vec3& u);

// Rotation rate of the field direction for constant B_y and slowly varying
// B_z: omega = B_y Bdot_z / B^2. Throws ZeroField.
double adiabatic_frequency(double B_y, double Bdot_z, double B_mag);

}  // namespace tprop::timedep
