#include "tprop/dynamics.hpp"

#include <cmath>
#include <complex>

#include "tprop/errors.hpp"
#include "tprop/kernels.hpp"

namespace tprop::dynamics {

namespace detail {

namespace {

struct DampedIntegrals {
    // Ic + i Is = integral of e^{-eta s} e^{i w s} over [0, t];
    // Jc + i Js = its second antiderivative; I1, J1 the w = 0 specializations.
    double Ic, Is, I1, Jc, Js, J1;
};

DampedIntegrals damped_integrals(double eta, double w, double t) {
    std::complex<double> z(-eta, w);
    std::complex<double> p1 = kernels::phi1(z * t);
    std::complex<double> p2 = kernels::phi2(z * t);
    DampedIntegrals r;
    r.Ic = t * p1.real();
    r.Is = t * p1.imag();
    r.Jc = t * t * p2.real();
    r.Js = t * t * p2.imag();
    r.I1 = t * kernels::phi1(-eta * t);
    r.J1 = t * t * kernels::phi2(-eta * t);
    return r;
}

}  // namespace

Vec3 damped_rotation_velocity(const Vec3& W, double eta, const Vec3& F,
                              const Vec3& v0, double t) {
    double w = norm(W);
    Vec3 n = (w > 0.0) ? W / w : Vec3{};
    double theta = w * t;
    double decay = std::exp(-eta * t);
    Vec3 homogeneous = decay * (std::cos(theta) * v0 - std::sin(theta) * cross(n, v0) +
                                kernels::omc(theta) * dot(n, v0) * n);
    DampedIntegrals q = damped_integrals(eta, w, t);
    Vec3 forced = q.Ic * F - q.Is * cross(n, F) + (q.I1 - q.Ic) * dot(n, F) * n;
    return homogeneous + forced;
}

Vec3 damped_rotation_displacement(const Vec3& W, double eta, const Vec3& F,
                                  const Vec3& v0, double t) {
    double w = norm(W);
    Vec3 n = (w > 0.0) ? W / w : Vec3{};
    DampedIntegrals q = damped_integrals(eta, w, t);
    Vec3 from_v0 = q.Ic * v0 - q.Is * cross(n, v0) + (q.I1 - q.Ic) * dot(n, v0) * n;
    Vec3 from_F = q.Jc * F - q.Js * cross(n, F) + (q.J1 - q.Jc) * dot(n, F) * n;
    return from_v0 + from_F;
}

}  // namespace detail

Vec3 lorentz_velocity(const Particle& p, const UniformFields& f, const Vec3& v0, double t) {
    return detail::damped_rotation_velocity(p.qm() * f.B, 0.0, p.qm() * f.E, v0, t);
}

Vec3 lorentz_position(const Particle& p, const UniformFields& f,
                      const ParticleState& state0, double t) {
    return state0.r +
           detail::damped_rotation_displacement(p.qm() * f.B, 0.0, p.qm() * f.E, state0.v, t);
}

Vec3 drift_velocity(const Vec3& E, const Vec3& B) {
    double b2 = norm2(B);
    if (b2 == 0.0) throw ZeroField("drift_velocity: B = 0");
    return cross(E, B) / b2;
}

Vec3 composed_drift(const Vec3& E, const Vec3& Eprime, const Vec3& B) {
    double b2 = norm2(B);
    if (b2 == 0.0) throw ZeroField("composed_drift: B = 0");
    return cross(E + Eprime, B) / b2;
}

Vec3 pseudo_momentum(const Particle& p, const UniformFields& f, const ParticleState& s) {
    Vec3 vd = drift_velocity(f.E, f.B);
    return p.mass * (s.v - vd) + p.charge * (cross(f.B, s.r) - s.t * f.E);
}

Vec3 drude_velocity(const Particle& p, const UniformFields& f, double tau,
                    const Vec3& v0, double t) {
    return detail::damped_rotation_velocity(p.qm() * f.B, 1.0 / tau, p.qm() * f.E, v0, t);
}

Vec3 coriolis_velocity(const CoriolisEnv& env, const Vec3& v0, double t) {
    return detail::damped_rotation_velocity(2.0 * env.omega, env.eta, env.g, v0, t);
}

Vec3 coriolis_position(const CoriolisEnv& env, const ParticleState& state0, double t) {
    return state0.r +
           detail::damped_rotation_displacement(2.0 * env.omega, env.eta, env.g, state0.v, t);
}

Vec3 limit_velocity(const CoriolisEnv& env) {
    if (env.eta <= 0.0)
        throw NoLimit("limit_velocity: eta = 0 leaves the axis component unbalanced");
    double w = norm(env.omega);
    if (w == 0.0) return env.g / env.eta;
    double eta = env.eta;
    double denom = eta * eta + 4.0 * w * w;
    double a = eta / denom;
    double b = 2.0 * w / denom;
    Vec3 n = env.omega / w;
    return a * env.g - b * cross(n, env.g) + (1.0 / eta - a) * dot(n, env.g) * n;
}

}  // namespace tprop::dynamics
