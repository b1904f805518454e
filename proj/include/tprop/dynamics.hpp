#pragma once

#include "tprop/vec3.hpp"

namespace tprop::dynamics {

struct Particle {
    double mass = 0.0;    // kg, > 0
    double charge = 0.0;  // C, signed

    // signed charge-to-mass ratio
    double qm() const { return charge / mass; }
};

struct UniformFields {
    Vec3 E;  // V/m
    Vec3 B;  // T
};

// Rotating-frame environment: Earth angular velocity, gravity, linear drag.
struct CoriolisEnv {
    Vec3 omega;        // rad/s
    Vec3 g;            // m/s^2
    double eta = 0.0;  // 1/s, >= 0
};

struct ParticleState {
    double t = 0.0;
    Vec3 r;  // m
    Vec3 v;  // m/s
};

namespace detail {

// Solution of dv/dt = -W x v - eta v + F with constant W, F.
// All integrals reduce to t phi1(z t), t^2 phi2(z t) with z = -eta + i|W|,
// so the expression is regular for every eta >= 0 including W -> 0.
Vec3 damped_rotation_velocity(const Vec3& W, double eta, const Vec3& F,
                              const Vec3& v0, double t);

// Displacement integral of the same solution over [0, t].
Vec3 damped_rotation_displacement(const Vec3& W, double eta, const Vec3& F,
                                  const Vec3& v0, double t);

}  // namespace detail

// Velocity of a charge in static uniform E, B (dv/dt = -(e/m)B x v + (e/m)E).
// B = 0 degenerates to uniform acceleration.
Vec3 lorentz_velocity(const Particle& p, const UniformFields& f, const Vec3& v0, double t);

// Time integral of lorentz_velocity added to the initial position.
Vec3 lorentz_position(const Particle& p, const UniformFields& f,
                      const ParticleState& state0, double t);

// (E x B)/B^2. Throws ZeroField when B = 0.
Vec3 drift_velocity(const Vec3& E, const Vec3& B);

// ((E + Eprime) x B)/B^2.
Vec3 composed_drift(const Vec3& E, const Vec3& Eprime, const Vec3& B);

// Conserved vector m(v - v_d) + e(B x r - t E) of uniform-field motion.
Vec3 pseudo_momentum(const Particle& p, const UniformFields& f, const ParticleState& s);

// Velocity with an extra relaxation term -v/tau (Drude-type damping).
Vec3 drude_velocity(const Particle& p, const UniformFields& f, double tau,
                    const Vec3& v0, double t);

// Falling body under Coriolis force, gravity and linear friction:
// dv/dt = -2 omega x v - eta v + g.
Vec3 coriolis_velocity(const CoriolisEnv& env, const Vec3& v0, double t);
Vec3 coriolis_position(const CoriolisEnv& env, const ParticleState& state0, double t);

// Stationary velocity solving 2 omega x v + eta v = g.
// Throws NoLimit when eta = 0.
Vec3 limit_velocity(const CoriolisEnv& env);

}  // namespace tprop::dynamics
