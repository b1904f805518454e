#pragma once

#include "tprop/dynamics.hpp"
#include "tprop/vec3.hpp"

namespace tprop::disentangle {

// Two rotation generators whose sum is to be split into successive rotations.
struct TorquePair {
    Vec3 omega1;  // rad/s
    Vec3 omega2;  // rad/s
};

// First-order split of exp(t(W1 + W2)): the commutator correction applied
// first, then the W2 rotation, then the W1 rotation. The correction is a
// rotation with torque -(t^2/2)(W1 x W2); local error O(t^3).
Vec3 zassenhaus_first_order(const TorquePair& pair, double t, const Vec3& s0);

// Strang split exp(t/2 W1) exp(t W2) exp(t/2 W1); local error O(t^3).
Vec3 symmetric_split(const TorquePair& pair, double t, const Vec3& s0);

// t^2 |W1 x W2|: dimensionless truncation diagnostic; splits are trustworthy
// well below 1.
double validity_margin(const TorquePair& pair, double t);

// Leading commutator kick v0 - w1 w2 t^2 (n1 x n2) x v0.
Vec3 first_order_kick(const TorquePair& pair, double t, const Vec3& v0);

// B* = B_T + 2 (m/e) omega: magnetic field equivalent to the combined
// magnetic + rotating-frame generator. Throws ZeroCharge.
Vec3 equivalent_field(const Vec3& B_T, const Vec3& omega, const dynamics::Particle& p);

// (m/e) (g x B*)/B*^2: drift orthogonal to gravity and to B*. Throws ZeroField.
Vec3 gravito_magnetic_drift(const Vec3& g, const Vec3& B_star, const dynamics::Particle& p);

// Relative size of the combined-generator correction:
// omega_cT * omega * t^2 * sin(lambda) * sin(chi).
double correction_ratio(double omega_cT, double omega, double t,
                        double lambda_angle, double chi_angle);

}  // namespace tprop::disentangle
