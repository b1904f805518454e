#pragma once

#include <complex>
#include <functional>

#include "tprop/vec3.hpp"

namespace tprop {

// Torque operator: the linear map v -> torque x v. Its exponential generates
// the axis-angle rotation about torque/|torque|; its spectrum is {0, +i|T|, -i|T|}.
struct Vop {
    Vec3 torque;  // rad/s

    Vop() = default;
    explicit Vop(const Vec3& t) : torque(t) {}

    double magnitude() const { return norm(torque); }

    // Unit axis; the zero vector when the torque vanishes (zero operator).
    Vec3 axis() const { return normalized(torque); }

    Vec3 apply(const Vec3& v) const { return cross(torque, v); }
};

// n nested applications of the operator; n = 0 is the identity.
Vec3 vop_power_apply(const Vop& op, int n, const Vec3& s0);

// Truncated exponential series sum_{k<n_terms} t^k/k! T^k s0.
// Internal oracle for the closed-form rotation.
Vec3 series_propagate(const Vop& op, double t, const Vec3& s0, int n_terms);

// Closed-form rotation: cos(Tt) s0 + sin(Tt)(n x s0) + (1-cos Tt)(n.s0) n.
Vec3 rodrigues_propagate(const Vop& op, double t, const Vec3& s0);

// Closed-form solution of dS/dt = torque x S + n_vec with S(0) = s0 and
// constant n_vec: the axis component of the drive integrates linearly, the
// transverse component through sin/cos antiderivatives.
Vec3 inhomogeneous_propagate(const Vop& op, const Vec3& n_vec, double t, const Vec3& s0);

using AnalyticFn = std::function<std::complex<double>(std::complex<double>)>;

// Applies f(op) to v through the spectral decomposition
//   f(op) v = f(0)(n.v) n + Re[f(iT)] (v - (n.v)n) + Im[f(iT)] (n x v).
// Requires f(0) real and f analytic with real coefficients (so that
// f(-iT) = conj f(iT)). Multivalued f must be supplied on its principal
// branch; that choice is part of the contract. When T = 0 returns f(0) v.
// Throws EvalError if f yields a non-finite value or a complex f(0).
Vec3 analytic_function_apply(const AnalyticFn& f, const Vop& op, const Vec3& v);

}  // namespace tprop
