#include "tprop/timedep.hpp"

#include <cmath>
#include <complex>

#include "tprop/bessel.hpp"
#include "tprop/errors.hpp"
#include "tprop/kernels.hpp"
#include "tprop/quadrature.hpp"
#include "tprop/vop.hpp"

namespace tprop::timedep {

Vec3 phase_vector(const SinusoidalField& f, double t) {
    double factor = (std::cos(f.omega * t + f.phi) - std::cos(f.phi)) / f.omega;
    return factor * f.omega0_vec();
}

Vec3 oscillating_b_velocity(const SinusoidalField& f, const Vec3& v0, double t) {
    return rodrigues_propagate(Vop(phase_vector(f, t)), 1.0, v0);
}

Vec3 jacobi_anger_velocity(const SinusoidalField& f, const Vec3& v0, double t, int n_max) {
    Vec3 omega0 = f.omega0_vec();
    if (norm(omega0) > 0.0 && std::fabs(dot(v0, normalized(omega0))) > 1e-12 * norm(v0))
        throw NotPerpendicular("jacobi_anger_velocity: v0 not perpendicular to the field axis");
    double zeta = f.zeta();
    Vec3 n{0.0, 1.0, 0.0};
    Vec3 w = cross(n, v0);

    // phi = pi/2: the accumulated phase is -zeta sin(omega t), so the rotation
    // splits into even cosine and odd sine harmonics with J_k(zeta) weights.
    std::vector<double> J = bessel_j_sequence(n_max + 1, zeta);
    double ct = J[0];
    double st = 0.0;
    for (int k = 1; k <= n_max; ++k) {
        if (k % 2 == 0)
            ct += 2.0 * J[k] * std::cos(k * f.omega * t);
        else
            st += 2.0 * J[k] * std::sin(k * f.omega * t);
    }
    // v = cos(Phi) v0 + sin(Phi)(n x v0) with Phi = -zeta sin(omega t)
    return ct * v0 - st * w;
}

Vec3 inhomogeneous_term(const SinusoidalField& f, double t, double quad_tol) {
    Vec3 q0 = f.q0_vec();
    QuadratureOptions opt;
    opt.abs_tol = quad_tol;
    opt.min_depth = depth_for_phase(2.0 * std::fabs(f.zeta()) + f.omega * std::fabs(t));
    auto integrand = [&](double tp) {
        Vec3 rot = phase_vector(f, t) - phase_vector(f, tp);
        return rodrigues_propagate(Vop(rot), 1.0, std::cos(f.omega * tp) * q0);
    };
    return adaptive_simpson(integrand, 0.0, t, opt);
}

Vec3 inhomogeneous_term_series(const SinusoidalField& f, double t, int k_max) {
    using cd = std::complex<double>;
    const cd I(0.0, 1.0);
    double zeta = f.zeta();
    Vec3 q0 = f.q0_vec();
    Vec3 n{0.0, 1.0, 0.0};
    Vec3 w = cross(n, q0);

    std::vector<double> J = bessel_j_sequence(k_max + 2, std::fabs(zeta));
    auto Jv = [&](int k) {
        double v = J[std::abs(k)];
        if (k < 0 && (k % 2)) v = -v;
        if (zeta < 0.0 && (k % 2)) v = -v;
        return v;
    };

    // w(t) = (t/2) sum_{k,n} exp(i (n+2k)/2 omega t) F_n(t) J_k(i z^) J_n(-i z^) q0
    // with the operator factors reduced on the transverse eigenplane:
    // J_k(i z^) J_n(-i z^) q0 = 1/2 (-1)^k J_k J_n (q0 - i n x q0)
    //                         + 1/2 (-1)^n J_k J_n (q0 + i n x q0).
    cd acc_q0(0.0, 0.0), acc_w(0.0, 0.0);
    for (int k = -k_max; k <= k_max; ++k) {
        for (int m = -k_max; m <= k_max; ++m) {
            double sp1 = 0.5 * (m + 1) * f.omega * t;
            double sm1 = 0.5 * (m - 1) * f.omega * t;
            cd Fm = std::exp(I * (0.5 * f.omega * t)) * kernels::sinc(sp1) +
                    std::exp(-I * (0.5 * f.omega * t)) * kernels::sinc(sm1);
            cd phase = std::exp(I * (0.5 * (m + 2.0 * k) * f.omega * t));
            double jj = Jv(k) * Jv(m);
            double sk = (k % 2 == 0) ? 1.0 : -1.0;
            double sm = (m % 2 == 0) ? 1.0 : -1.0;
            cd coeff = phase * Fm * (0.5 * jj);
            acc_q0 += coeff * (sk + sm);
            acc_w += coeff * (-I * sk + I * sm);
        }
    }
    return (0.5 * t) * (acc_q0.real() * q0 + acc_w.real() * w);
}

Vec3 resolvent_velocity(const dynamics::Particle& p, const Vec3& B,
                        const std::function<Vec3(double)>& Q_of_t, double t,
                        double quad_tol) {
    Vec3 Wv = p.qm() * B;
    double W = norm(Wv);
    QuadratureOptions opt;
    opt.abs_tol = quad_tol;
    opt.min_depth = depth_for_phase(W * std::fabs(t));
    if (W == 0.0) {
        return adaptive_simpson([&](double tp) { return Q_of_t(tp); }, 0.0, t, opt);
    }
    Vec3 n = Wv / W;
    Vec3 c = adaptive_simpson(
        [&](double tp) { return std::cos(W * (tp - t)) * Q_of_t(tp); }, 0.0, t, opt);
    Vec3 s = adaptive_simpson(
        [&](double tp) { return std::sin(W * (tp - t)) * Q_of_t(tp); }, 0.0, t, opt);
    Vec3 fv = adaptive_simpson(
        [&](double tp) { return (1.0 - std::cos(W * (tp - t))) * Q_of_t(tp); }, 0.0, t, opt);
    return c + dot(n, fv) * n + cross(n, s);
}

Vec3 vop_commutator(const Vec3& t1_vec, const Vec3& t2_vec) {
    return 2.0 * cross(t1_vec, t2_vec);
}

Vec3 magnus_gamma(const TimeTorque& tt, double t, int n_quad) {
    return composite_simpson([&](double tau) { return tt.omega_of_t(tau); }, 0.0, t, n_quad);
}

Vec3 magnus_delta(const TimeTorque& tt, double t, int n_quad) {
    auto outer = [&](double t1) {
        Vec3 omega1 = tt.omega_of_t(t1);
        Vec3 inner = composite_simpson([&](double t2) { return tt.omega_of_t(t2); },
                                       0.0, t1, n_quad);
        return 0.5 * vop_commutator(omega1, inner);
    };
    return composite_simpson(outer, 0.0, t, n_quad);
}

Vec3 magnus2_propagate(const TimeTorque& tt, double t, const Vec3& s0, int n_quad) {
    if (n_quad < 8) throw Error("magnus2_propagate: n_quad must be >= 8");
    Vec3 gamma = magnus_gamma(tt, t, n_quad);
    Vec3 delta = magnus_delta(tt, t, n_quad);
    return rodrigues_propagate(Vop(-1.0 * gamma + 0.5 * delta), 1.0, s0);
}

Vec3 adiabatic_delta(double Omega_mag, double omega_rot, double t, const Vec3& u) {
    return (Omega_mag * Omega_mag * omega_rot * t * t * t / 6.0) * u;
}

double adiabatic_frequency(double B_y, double Bdot_z, double B_mag) {
    if (B_mag <= 0.0) throw ZeroField("adiabatic_frequency: B = 0");
    return B_y * Bdot_z / (B_mag * B_mag);
}

}  // namespace tprop::timedep
