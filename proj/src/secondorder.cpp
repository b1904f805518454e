#include "tprop/secondorder.hpp"

#include <cmath>
#include <vector>

#include "tprop/errors.hpp"
#include "tprop/quadrature.hpp"
#include "tprop/vop.hpp"

namespace tprop::secondorder {

using cd = std::complex<double>;

double hermite2(int n, const HermiteArgs& args) {
    if (n < 0) throw Error("hermite2: n must be nonnegative");
    if (n > 400) throw OverflowError("hermite2: n > 400");
    if (n == 0) return 1.0;

    double la = (args.a != 0.0) ? std::log(std::fabs(args.a)) : 0.0;
    double lb = (args.b != 0.0) ? std::log(std::fabs(args.b)) : 0.0;
    double sa = (args.a < 0.0) ? -1.0 : 1.0;
    double sb = (args.b < 0.0) ? -1.0 : 1.0;

    // scan terms in log magnitude, then accumulate scaled by the max
    std::vector<double> logs;
    std::vector<double> signs;
    double logmax = -1e308;
    for (int k = 0; 2 * k <= n; ++k) {
        int pa = n - 2 * k;
        if ((pa > 0 && args.a == 0.0) || (k > 0 && args.b == 0.0)) continue;
        double lg = std::lgamma(n + 1.0) - std::lgamma(pa + 1.0) - std::lgamma(k + 1.0) +
                    pa * la + k * lb;
        double sg = ((pa % 2) ? sa : 1.0) * ((k % 2) ? sb : 1.0);
        logs.push_back(lg);
        signs.push_back(sg);
        logmax = std::max(logmax, lg);
    }
    if (logs.empty()) return 0.0;

    double acc = 0.0;
    for (size_t i = 0; i < logs.size(); ++i) acc += signs[i] * std::exp(logs[i] - logmax);
    if (acc == 0.0) return 0.0;
    double logval = logmax + std::log(std::fabs(acc));
    if (logval > 709.0) throw OverflowError("hermite2: value exceeds double range");
    return ((acc < 0.0) ? -1.0 : 1.0) * std::exp(logval);
}

ChSh ch_sh(double T_mag, double t, double lambda, int n_max) {
    double T = std::fabs(T_mag);
    // T = 0 or t = 0: only the n = 0 term of the series survives
    if (T == 0.0 || t == 0.0) return {1.0, 0.0};
    // halve the time argument until the series has no growing terms
    double spread = T * std::fabs(t) + std::fabs(lambda) * T * T * std::fabs(t);
    int k = 0;
    while (spread > 1.0 && k < 64) {
        spread *= 0.5;
        ++k;
    }
    double ts = t / static_cast<double>(1 << k);

    // z_n = H_n(ts, lambda ts) (iT)^n / n!, via the three-term recurrence
    // H_{n+1} = a H_n + 2 b n H_{n-1} with a = ts, b = lambda ts
    cd iT(0.0, T);
    cd z_prev = 1.0;
    cd z_cur = ts * iT;  // H_1 = a
    cd sum = z_prev + z_cur;
    bool converged = false;
    for (int n = 1; n < n_max; ++n) {
        cd z_next = (iT * ts / double(n + 1)) * z_cur -
                    ((2.0 * lambda * ts * T * T) / double(n + 1)) * z_prev;
        sum += z_next;
        z_prev = z_cur;
        z_cur = z_next;
        if (std::abs(z_cur) + std::abs(z_prev) < 1e-16 * std::max(1.0, std::abs(sum))) {
            converged = true;
            break;
        }
    }
    if (!converged && std::abs(z_cur) > 1e-12 * std::max(1.0, std::abs(sum)))
        throw NotConverged("ch_sh: series tail above 1e-12 at n_max");

    for (int i = 0; i < k; ++i) sum *= sum;
    if (T_mag < 0.0) sum = std::conj(sum);  // odd sum flips with the sign of T
    return {sum.real(), sum.imag()};
}

Vec3 quadratic_vop_evolve(const Vec3& T_vec, double lambda, double t, const Vec3& s0) {
    double T = norm(T_vec);
    if (T == 0.0) return s0;
    Vec3 n = T_vec / T;
    ChSh c = ch_sh(T, t, lambda, 256);
    return c.ch * s0 + c.sh * cross(n, s0) + (1.0 - c.ch) * dot(n, s0) * n;
}

// ---------------------------------------------------------------------------
// Radiation reaction: spectral blocks
// ---------------------------------------------------------------------------

namespace {

struct Blocks {
    double W = 0.0;  // |Omega|
    Vec3 n, e1, e2;

    explicit Blocks(const Vec3& Omega) {
        W = norm(Omega);
        if (W > 0.0) {
            n = Omega / W;
            perp_basis(n, e1, e2);
        }
    }

    double axial(const Vec3& v) const { return (W > 0.0) ? dot(n, v) : 0.0; }
    // transverse amplitude u with Omega^ acting as multiplication by i W
    cd transverse(const Vec3& v) const {
        if (W == 0.0) return {0.0, 0.0};
        return {dot(v, e1), dot(v, e2)};
    }
    Vec3 reconstruct(double ax, cd u) const {
        if (W == 0.0) return {};
        return ax * n + u.real() * e1 + u.imag() * e2;
    }
};

struct BranchRates {
    cd alpha, Ap, Am;  // alpha(z), A+(z), A-(z)
};

BranchRates rates(double tau, cd z) {
    cd alpha = std::sqrt(1.0 + 4.0 * tau * z);
    return {alpha, (1.0 + alpha) / (2.0 * tau), (1.0 - alpha) / (2.0 * tau)};
}

// forced kernel g(s; z) = -(1/alpha)[e^{s A+} - e^{s A-}]
cd forced_kernel(const BranchRates& r, double s) {
    return -(std::exp(s * r.Ap) - std::exp(s * r.Am)) / r.alpha;
}

// entry kernels of the companion matrix exponential
cd entry_e12(const BranchRates& r, double tau, double s) {
    double sigma = s / (2.0 * tau);
    return std::exp(sigma) * (2.0 * tau / r.alpha) * std::sinh(sigma * r.alpha);
}
cd entry_e22(const BranchRates& r, double tau, double s) {
    double sigma = s / (2.0 * tau);
    return std::exp(sigma) * (std::sinh(sigma * r.alpha) / r.alpha + std::cosh(sigma * r.alpha));
}

}  // namespace

Vec3 rr_forced_velocity(const RadiationReactionParams& params,
                        const std::function<Vec3(double)>& Q_of_t, double t,
                        double quad_tol) {
    Blocks blk(params.Omega);
    BranchRates ax = rates(params.tau, cd(0.0, 0.0));
    QuadratureOptions opt;
    opt.abs_tol = quad_tol;
    opt.min_depth = depth_for_phase(blk.W * std::fabs(t));

    if (blk.W == 0.0) {
        // isotropic: one scalar kernel applied componentwise
        return adaptive_simpson(
            [&](double xi) { return forced_kernel(ax, t - xi).real() * Q_of_t(xi); }, 0.0, t,
            opt);
    }
    BranchRates pp = rates(params.tau, cd(0.0, blk.W));
    double v_ax = adaptive_simpson(
        [&](double xi) { return forced_kernel(ax, t - xi).real() * blk.axial(Q_of_t(xi)); },
        0.0, t, opt);
    cd v_perp = adaptive_simpson(
        [&](double xi) { return forced_kernel(pp, t - xi) * blk.transverse(Q_of_t(xi)); },
        0.0, t, opt);
    return blk.reconstruct(v_ax, v_perp);
}

namespace {

// one spectral block of the homogeneous companion propagation
void propagate_block(const BranchRates& r, double tau, double t, cd v0, cd a0, cd& v,
                     cd& a) {
    cd c1 = (tau / r.alpha) * (a0 - r.Am * v0);
    cd c2 = (tau / r.alpha) * (r.Ap * v0 - a0);
    double scale = std::abs(v0) + tau * std::abs(a0);
    if (std::abs(c1) < 1e-12 * scale) c1 = 0.0;
    if (std::abs(c2) < 1e-12 * scale) c2 = 0.0;
    v = a = 0.0;
    if (c1 != 0.0) {
        cd e = std::exp(t * r.Ap);
        v += e * c1;
        a += r.Ap * e * c1;
    }
    if (c2 != 0.0) {
        cd e = std::exp(t * r.Am);
        v += e * c2;
        a += r.Am * e * c2;
    }
}

}  // namespace

std::pair<Vec3, Vec3> rr_matrix_propagate(const RadiationReactionParams& params,
                                          const Vec3& v0, const Vec3& a0,
                                          const std::function<Vec3(double)>& Q_of_t,
                                          double t, double quad_tol) {
    double tau = params.tau;
    Blocks blk(params.Omega);
    BranchRates ax = rates(tau, cd(0.0, 0.0));
    QuadratureOptions opt;
    opt.abs_tol = quad_tol;
    opt.min_depth = depth_for_phase(blk.W * std::fabs(t));

    Vec3 v_out, a_out;
    if (blk.W == 0.0) {
        for (int i = 0; i < 3; ++i) {
            cd v, a;
            propagate_block(ax, tau, t, v0[i], a0[i], v, a);
            v_out[i] = v.real();
            a_out[i] = a.real();
        }
    } else {
        BranchRates pp = rates(tau, cd(0.0, blk.W));
        cd v_p, a_p, v_x, a_x;
        propagate_block(pp, tau, t, blk.transverse(v0), blk.transverse(a0), v_p, a_p);
        propagate_block(ax, tau, t, cd(blk.axial(v0), 0.0), cd(blk.axial(a0), 0.0), v_x, a_x);
        v_out = blk.reconstruct(v_x.real(), v_p);
        a_out = blk.reconstruct(a_x.real(), a_p);
    }

    if (Q_of_t) {
        // forcing enters the companion system as K = -(0, Q/tau)
        if (blk.W == 0.0) {
            Vec3 vi = adaptive_simpson(
                [&](double tp) {
                    return entry_e12(ax, tau, t - tp).real() * (-1.0 / tau) * Q_of_t(tp);
                },
                0.0, t, opt);
            Vec3 ai = adaptive_simpson(
                [&](double tp) {
                    return entry_e22(ax, tau, t - tp).real() * (-1.0 / tau) * Q_of_t(tp);
                },
                0.0, t, opt);
            v_out += vi;
            a_out += ai;
        } else {
            BranchRates pp = rates(tau, cd(0.0, blk.W));
            double vi_ax = adaptive_simpson(
                [&](double tp) {
                    return entry_e12(ax, tau, t - tp).real() * (-blk.axial(Q_of_t(tp)) / tau);
                },
                0.0, t, opt);
            double ai_ax = adaptive_simpson(
                [&](double tp) {
                    return entry_e22(ax, tau, t - tp).real() * (-blk.axial(Q_of_t(tp)) / tau);
                },
                0.0, t, opt);
            cd vi_p = adaptive_simpson(
                [&](double tp) {
                    return entry_e12(pp, tau, t - tp) * (-1.0 / tau) * blk.transverse(Q_of_t(tp));
                },
                0.0, t, opt);
            cd ai_p = adaptive_simpson(
                [&](double tp) {
                    return entry_e22(pp, tau, t - tp) * (-1.0 / tau) * blk.transverse(Q_of_t(tp));
                },
                0.0, t, opt);
            v_out += blk.reconstruct(vi_ax, vi_p);
            a_out += blk.reconstruct(ai_ax, ai_p);
        }
    }
    return {v_out, a_out};
}

Vec3 rr_nonrunaway_accel(const RadiationReactionParams& params, const Vec3& v0) {
    Blocks blk(params.Omega);
    BranchRates ax = rates(params.tau, cd(0.0, 0.0));
    if (blk.W == 0.0) return ax.Am.real() * v0;  // A-(0) = 0
    BranchRates pp = rates(params.tau, cd(0.0, blk.W));
    return blk.reconstruct(ax.Am.real() * blk.axial(v0), pp.Am * blk.transverse(v0));
}

// ---------------------------------------------------------------------------
// Liouville reduction
// ---------------------------------------------------------------------------

LiouvilleReduction liouville_reduce(const Vec3& A_vec, const Vec3& B_vec) {
    double na = norm(A_vec), nb = norm(B_vec);
    if (norm(cross(A_vec, B_vec)) > 1e-12 * na * nb)
        throw NonCommuting("liouville_reduce: A x B != 0");

    LiouvilleReduction red;
    red.transform_half_torque = -0.5 * A_vec;
    Vec3 n = (na > 0.0) ? A_vec / na : (nb > 0.0 ? B_vec / nb : Vec3{});
    red.axis = n;
    double As = dot(A_vec, n);
    double Bs = dot(B_vec, n);
    red.kappa = cd(As * As / 4.0, Bs);  // i Bs + As^2/4
    return red;
}

Vec3 LiouvilleReduction::solve(const Vec3& s0, const Vec3& sdot0, double t) const {
    Vec3 A_vec = -2.0 * transform_half_torque;
    Vec3 u0 = s0;
    Vec3 udot0 = sdot0 + 0.5 * cross(A_vec, s0);

    Vec3 u_t;
    if (norm(axis) == 0.0) {
        u_t = u0 + t * udot0;
    } else {
        Vec3 e1, e2;
        perp_basis(axis, e1, e2);
        double ax0 = dot(axis, u0), axd0 = dot(axis, udot0);
        cd up0(dot(u0, e1), dot(u0, e2));
        cd upd0(dot(udot0, e1), dot(udot0, e2));
        double ax_t = ax0 + t * axd0;  // axis eigenvalue of the reduced operator is 0
        cd mu = std::sqrt(kappa);
        cd up_t;
        if (mu == cd(0.0, 0.0)) {
            up_t = up0 + t * upd0;
        } else {
            up_t = up0 * std::cos(mu * t) + upd0 * std::sin(mu * t) / mu;
        }
        u_t = ax_t * axis + up_t.real() * e1 + up_t.imag() * e2;
    }
    // map back: s = exp(-(t/2) A^) u
    return rodrigues_propagate(Vop(transform_half_torque), t, u_t);
}

}  // namespace tprop::secondorder
