#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tprop/dynamics.hpp"
#include "tprop/oracle.hpp"
#include "tprop/vec3.hpp"

namespace tprop::stepping {

// Spatially varying fields sampled pointwise along the orbit.
struct FieldMap {
    std::function<Vec3(const Vec3&)> B_of_r;           // T
    std::function<Vec3(const Vec3&)> E_of_r = nullptr; // V/m, optional
};

// Relativistic carrier state: Lambda = gamma v.
struct RelState {
    double t = 0.0;
    Vec3 r;       // m
    Vec3 Lambda;  // m/s

    double gamma(double c) const { return std::sqrt(1.0 + norm2(Lambda) / (c * c)); }
    Vec3 velocity(double c) const { return Lambda / gamma(c); }
};

struct LlgParams {
    double alpha = 0.0;  // precession coefficient
    double beta = 0.0;   // alignment coefficient
    Vec3 H;              // effective field
};

struct Trajectory {
    std::vector<dynamics::ParticleState> samples;
    double delta = 0.0;
    std::string scheme;
};

struct RelTrajectory {
    std::vector<RelState> samples;
    double delta = 0.0;
    double c = 0.0;
    std::string scheme;
};

// One exact rotation step with the magnetic field frozen at B_k (no electric
// field): each step conserves |v| exactly.
dynamics::ParticleState step_uniform(const dynamics::Particle& p, const Vec3& B_k,
                                     const dynamics::ParticleState& state, double delta);

// Piecewise-constant-field propagation: the field is re-sampled at each new
// position (step start by default, position midpoint estimate when
// midpoint_sampling is set) and each step advanced in closed form.
Trajectory propagate_field_map(const dynamics::Particle& p, const FieldMap& f,
                               const dynamics::ParticleState& state0, double delta,
                               int n_steps, bool midpoint_sampling = false);

// Cycle-averaged force on a gyrating charge from a weak field gradient,
// F = (m/2B0) [ (v0.grad)B x (n x v0) - ((n x v0).grad)B x v0 ],
// valid for v0 perpendicular to B0 and field variation small over a Larmor
// radius. gradB[i][j] = dB_i/dr_j. Throws NotPerpendicular.
Vec3 grad_b_drift_force(const dynamics::Particle& p, const Vec3& B0, const Mat3& gradB,
                        const Vec3& v0);

// One frozen-gamma step of dLambda/dt = -(1/gamma) Omega x Lambda + Q:
// the closed-form update is applied with cyclotron vector Omega/gamma_{n-1},
// then gamma is recomputed from |Lambda|.
RelState relativistic_step(const dynamics::Particle& p, const dynamics::UniformFields& f,
                           const RelState& state, double delta, double c);

RelTrajectory propagate_relativistic(const dynamics::Particle& p,
                                     const dynamics::UniformFields& f, const RelState& state0,
                                     double delta, int n_steps, double c);

// Max over samples of |Lambda^2(t) - Lambda0^2 - 2 int Q.Lambda dt'| with
// trapezoid quadrature: an a-posteriori energy-consistency residual.
double kinetic_energy_check(const RelTrajectory& traj, const Vec3& Q);

// One magnetization step: M_n = exact rotation of M_{n-1} about
// P = (alpha + beta M_{n-1} x) H frozen from the previous step. |M| is
// conserved exactly; the beta term drives M toward H.
Vec3 llg_step(const Vec3& M, const LlgParams& params, double delta);

// Flattens a trajectory onto the (t, [r v]) grid layout of the reference
// integrator so oracle::max_deviation can compare the two directly.
oracle::OracleResult as_flat_states(const Trajectory& traj);

}  // namespace tprop::stepping
