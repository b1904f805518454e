#include "tprop/stepping.hpp"

#include <cmath>

#include "tprop/errors.hpp"
#include "tprop/vop.hpp"

namespace tprop::stepping {

namespace {

// Closed-form advance of (r, v) over delta with frozen uniform E, B.
dynamics::ParticleState frozen_field_step(const dynamics::Particle& p, const Vec3& B,
                                          const Vec3& E, const dynamics::ParticleState& s,
                                          double delta) {
    Vec3 W = p.qm() * B;
    Vec3 Q = p.qm() * E;
    dynamics::ParticleState out;
    out.t = s.t + delta;
    out.v = dynamics::detail::damped_rotation_velocity(W, 0.0, Q, s.v, delta);
    out.r = s.r + dynamics::detail::damped_rotation_displacement(W, 0.0, Q, s.v, delta);
    return out;
}

}  // namespace

dynamics::ParticleState step_uniform(const dynamics::Particle& p, const Vec3& B_k,
                                     const dynamics::ParticleState& state, double delta) {
    return frozen_field_step(p, B_k, Vec3{}, state, delta);
}

Trajectory propagate_field_map(const dynamics::Particle& p, const FieldMap& f,
                               const dynamics::ParticleState& state0, double delta,
                               int n_steps, bool midpoint_sampling) {
    Trajectory traj;
    traj.delta = delta;
    traj.scheme = midpoint_sampling ? "frozen-field-midpoint" : "frozen-field";
    traj.samples.reserve(static_cast<size_t>(n_steps) + 1);
    traj.samples.push_back(state0);

    dynamics::ParticleState s = state0;
    for (int k = 0; k < n_steps; ++k) {
        Vec3 where = midpoint_sampling ? s.r + (0.5 * delta) * s.v : s.r;
        Vec3 B = f.B_of_r(where);
        Vec3 E = f.E_of_r ? f.E_of_r(where) : Vec3{};
        s = frozen_field_step(p, B, E, s, delta);
        if (!is_finite(s.r) || !is_finite(s.v))
            throw NonFiniteState("propagate_field_map: state diverged");
        traj.samples.push_back(s);
    }
    return traj;
}

Vec3 grad_b_drift_force(const dynamics::Particle& p, const Vec3& B0, const Mat3& gradB,
                        const Vec3& v0) {
    double b = norm(B0);
    if (b == 0.0) throw ZeroField("grad_b_drift_force: B0 = 0");
    Vec3 n = B0 / b;
    if (std::fabs(dot(v0, n)) > 1e-9 * norm(v0))
        throw NotPerpendicular("grad_b_drift_force: v0 has a component along B0");
    Vec3 w = cross(n, v0);
    Vec3 dB_v0 = gradB.apply(v0);  // (v0.grad) B
    Vec3 dB_w = gradB.apply(w);    // ((n x v0).grad) B
    return (p.mass / (2.0 * b)) * (cross(dB_v0, w) - cross(dB_w, v0));
}

RelState relativistic_step(const dynamics::Particle& p, const dynamics::UniformFields& f,
                           const RelState& state, double delta, double c) {
    double gamma = state.gamma(c);
    Vec3 W = (p.qm() / gamma) * f.B;
    Vec3 Q = p.qm() * f.E;
    RelState out;
    out.t = state.t + delta;
    out.Lambda = dynamics::detail::damped_rotation_velocity(W, 0.0, Q, state.Lambda, delta);
    out.r = state.r +
            dynamics::detail::damped_rotation_displacement(W, 0.0, Q, state.Lambda, delta) / gamma;
    return out;
}

RelTrajectory propagate_relativistic(const dynamics::Particle& p,
                                     const dynamics::UniformFields& f, const RelState& state0,
                                     double delta, int n_steps, double c) {
    RelTrajectory traj;
    traj.delta = delta;
    traj.c = c;
    traj.scheme = "frozen-gamma";
    traj.samples.reserve(static_cast<size_t>(n_steps) + 1);
    traj.samples.push_back(state0);
    RelState s = state0;
    for (int k = 0; k < n_steps; ++k) {
        s = relativistic_step(p, f, s, delta, c);
        if (!is_finite(s.Lambda) || !is_finite(s.r))
            throw NonFiniteState("propagate_relativistic: state diverged");
        traj.samples.push_back(s);
    }
    return traj;
}

double kinetic_energy_check(const RelTrajectory& traj, const Vec3& Q) {
    if (traj.samples.empty()) return 0.0;
    double lambda0_sq = norm2(traj.samples.front().Lambda);
    double integral = 0.0;
    double worst = 0.0;
    for (size_t i = 0; i < traj.samples.size(); ++i) {
        if (i > 0) {
            double h = traj.samples[i].t - traj.samples[i - 1].t;
            integral += 0.5 * h * (dot(Q, traj.samples[i - 1].Lambda) +
                                   dot(Q, traj.samples[i].Lambda));
        }
        double residual =
            std::fabs(norm2(traj.samples[i].Lambda) - lambda0_sq - 2.0 * integral);
        worst = std::max(worst, residual);
    }
    return worst;
}

Vec3 llg_step(const Vec3& M, const LlgParams& params, double delta) {
    Vec3 P = params.alpha * params.H + params.beta * cross(M, params.H);
    return rodrigues_propagate(Vop(P), delta, M);
}

oracle::OracleResult as_flat_states(const Trajectory& traj) {
    oracle::OracleResult out;
    out.times.reserve(traj.samples.size());
    out.states.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        out.times.push_back(s.t);
        out.states.push_back({s.r.x, s.r.y, s.r.z, s.v.x, s.v.y, s.v.z});
    }
    return out;
}

}  // namespace tprop::stepping
