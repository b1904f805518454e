#include "tprop/vop.hpp"

#include <cmath>

#include "tprop/errors.hpp"
#include "tprop/kernels.hpp"

namespace tprop {

Vec3 vop_power_apply(const Vop& op, int n, const Vec3& s0) {
    Vec3 s = s0;
    for (int k = 0; k < n; ++k) s = op.apply(s);
    return s;
}

Vec3 series_propagate(const Vop& op, double t, const Vec3& s0, int n_terms) {
    Vec3 sum = s0;
    Vec3 term = s0;
    for (int k = 1; k < n_terms; ++k) {
        term = (t / k) * op.apply(term);
        sum += term;
    }
    return sum;
}

Vec3 rodrigues_propagate(const Vop& op, double t, const Vec3& s0) {
    double T = op.magnitude();
    if (T == 0.0) return s0;
    double theta = T * t;
    // Written against the raw torque so the T -> 0 limit is smooth:
    //   sin(theta)(n x s0)      = t sinc(theta) (torque x s0)
    //   (1-cos theta)(n.s0) n   = t^2 omc_x2(theta) (torque.s0) torque
    return std::cos(theta) * s0
         + (t * kernels::sinc(theta)) * cross(op.torque, s0)
         + (t * t * kernels::omc_x2(theta) * dot(op.torque, s0)) * op.torque;
}

Vec3 inhomogeneous_propagate(const Vop& op, const Vec3& n_vec, double t, const Vec3& s0) {
    double T = op.magnitude();
    if (T == 0.0) return s0 + t * n_vec;
    Vec3 n = op.axis();
    double theta = T * t;
    Vec3 axial = dot(n, n_vec) * n;
    Vec3 perp = n_vec - axial;
    // integral of U(-t') n_vec over [0, t]
    Vec3 integral = t * axial
                  + (t * kernels::sinc(theta)) * perp
                  - (t * kernels::omc_x(theta)) * cross(n, perp);
    return rodrigues_propagate(op, t, s0 + integral);
}

Vec3 analytic_function_apply(const AnalyticFn& f, const Vop& op, const Vec3& v) {
    double T = op.magnitude();
    std::complex<double> f0 = f(std::complex<double>(0.0, 0.0));
    if (!std::isfinite(f0.real()) || !std::isfinite(f0.imag()))
        throw EvalError("analytic_function_apply: f(0) not evaluable");
    if (std::fabs(f0.imag()) > 1e-12 * (1.0 + std::fabs(f0.real())))
        throw EvalError("analytic_function_apply: f(0) is not real");
    if (T == 0.0) return f0.real() * v;

    std::complex<double> fiT = f(std::complex<double>(0.0, T));
    if (!std::isfinite(fiT.real()) || !std::isfinite(fiT.imag()))
        throw EvalError("analytic_function_apply: f(iT) not evaluable");

    Vec3 n = op.axis();
    Vec3 axial = dot(n, v) * n;
    Vec3 perp = v - axial;
    return f0.real() * axial + fiT.real() * perp + fiT.imag() * cross(n, perp);
}

}  // namespace tprop
