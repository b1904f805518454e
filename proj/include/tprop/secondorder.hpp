#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "tprop/vec3.hpp"

namespace tprop::secondorder {

struct HermiteArgs {
    double a = 0.0;
    double b = 0.0;
};

// Two-variable Hermite polynomial H_n(a,b) = n! sum_k a^{n-2k} b^k /((n-2k)! k!),
// the coefficients of exp(a xi + b xi^2). Log-domain accumulation with sign
// tracking; reaches n = 400 without overflow. Throws OverflowError when the
// value itself leaves double range.
double hermite2(int n, const HermiteArgs& args);

struct ChSh {
    double ch = 1.0;
    double sh = 0.0;
};

// Cos- and sin-like sums sum_n (-)^n T^{2n} H_{2n}(t, lambda t)/(2n)! (and the
// odd counterpart): the transverse-plane trigonometry of exp(t T^ + lambda t T^2).
// Evaluated as partial sums at t/2^k followed by k complex squarings (the
// semigroup property along a fixed axis), which keeps every regime free of
// cancellation. Identity: (Ch, Sh) = e^{-lambda T^2 t} (cos Tt, sin Tt).
// Throws NotConverged when the series tail is above 1e-12 at n_max.
ChSh ch_sh(double T_mag, double t, double lambda, int n_max);

// Solution of dS/dt = T x S + lambda T x (T x S): the axis-angle rotation
// template with cos -> Ch, sin -> Sh; the axis component is invariant.
Vec3 quadratic_vop_evolve(const Vec3& T_vec, double lambda, double t, const Vec3& s0);

// Radiation-reaction equation (-tau d2/dt2 + d/dt + Omega^) v = Q(t):
// tau = (2/3) r0/c, Omega = (e/m) B. All operator functions are evaluated on
// the spectrum {0, +i|Omega|, -i|Omega|} with alpha(z) = sqrt(1 + 4 tau z)
// (principal branch) and A+- = (1 +- alpha)/(2 tau).
struct RadiationReactionParams {
    double tau = 0.0;  // s, > 0
    double r0 = 0.0;   // m, classical radius (bookkeeping; tau is what enters)
    Vec3 Omega;        // rad/s
};

// Forced solution with v(0) = v'(0) = 0 and Q(t) = 0 for t < 0:
// v(t) = -int_0^t (1/alpha)[e^{(t-xi)A+} - e^{(t-xi)A-}] Q(xi) dxi.
Vec3 rr_forced_velocity(const RadiationReactionParams& params,
                        const std::function<Vec3(double)>& Q_of_t, double t,
                        double quad_tol);

// Companion-form propagation of Z = (v, a): homogeneous part through the
// eigenmodes e^{A+- t} of the 2x2 operator matrix exponential, inhomogeneous
// part by quadrature of the literal sinh/cosh entry kernels. Mode amplitudes
// below 1e-12 of the local data scale are dropped before exponentiation
// (ulp noise times e^{t/tau} would otherwise swamp the result).
std::pair<Vec3, Vec3> rr_matrix_propagate(const RadiationReactionParams& params,
                                          const Vec3& v0, const Vec3& a0,
                                          const std::function<Vec3(double)>& Q_of_t,
                                          double t, double quad_tol = 1e-10);

// a0 = A- v0: the initial acceleration that populates only the non-runaway
// branch of the homogeneous equation.
Vec3 rr_nonrunaway_accel(const RadiationReactionParams& params, const Vec3& v0);

// Reduction of s'' + A^ s' + B^ s = 0 (commuting A, B) to u'' + (B^ - A^2/4)u = 0
// via s = exp(-(t/2)A^) u. The transform is a rotation; the reduced operator
// is carried as its axis plus transverse spectral value.
struct LiouvilleReduction {
    Vec3 transform_half_torque;   // -A/2; s(t) = rotation(t * this) u(t)
    Vec3 axis;                    // shared unit axis (zero when A = B = 0)
    std::complex<double> kappa;   // transverse eigenvalue of B^ - A^2/4

    // Solves the reduced equation for u and maps back to s(t).
    Vec3 solve(const Vec3& s0, const Vec3& sdot0, double t) const;
};

// Throws NonCommuting when |A x B| > 1e-12 |A||B|.
LiouvilleReduction liouville_reduce(const Vec3& A_vec, const Vec3& B_vec);

}  // namespace tprop::secondorder
