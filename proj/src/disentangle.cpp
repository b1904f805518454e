#include "tprop/disentangle.hpp"

#include <cmath>

#include "tprop/errors.hpp"
#include "tprop/vop.hpp"

namespace tprop::disentangle {

Vec3 zassenhaus_first_order(const TorquePair& pair, double t, const Vec3& s0) {
    Vec3 z1 = (-0.5 * t * t) * cross(pair.omega1, pair.omega2);
    Vec3 s = rodrigues_propagate(Vop(z1), 1.0, s0);
    s = rodrigues_propagate(Vop(pair.omega2), t, s);
    return rodrigues_propagate(Vop(pair.omega1), t, s);
}

Vec3 symmetric_split(const TorquePair& pair, double t, const Vec3& s0) {
    Vec3 s = rodrigues_propagate(Vop(pair.omega1), 0.5 * t, s0);
    s = rodrigues_propagate(Vop(pair.omega2), t, s);
    return rodrigues_propagate(Vop(pair.omega1), 0.5 * t, s);
}

double validity_margin(const TorquePair& pair, double t) {
    return t * t * norm(cross(pair.omega1, pair.omega2));
}

Vec3 first_order_kick(const TorquePair& pair, double t, const Vec3& v0) {
    double w1 = norm(pair.omega1), w2 = norm(pair.omega2);
    if (w1 == 0.0 || w2 == 0.0) return v0;
    Vec3 n1 = pair.omega1 / w1, n2 = pair.omega2 / w2;
    return v0 - (w1 * w2 * t * t) * cross(cross(n1, n2), v0);
}

Vec3 equivalent_field(const Vec3& B_T, const Vec3& omega, const dynamics::Particle& p) {
    if (p.charge == 0.0) throw ZeroCharge("equivalent_field: e = 0");
    return B_T + (2.0 * p.mass / p.charge) * omega;
}

Vec3 gravito_magnetic_drift(const Vec3& g, const Vec3& B_star, const dynamics::Particle& p) {
    double b2 = norm2(B_star);
    if (b2 == 0.0) throw ZeroField("gravito_magnetic_drift: B* = 0");
    return (p.mass / p.charge) * cross(g, B_star) / b2;
}

double correction_ratio(double omega_cT, double omega, double t,
                        double lambda_angle, double chi_angle) {
    return omega_cT * omega * t * t * std::sin(lambda_angle) * std::sin(chi_angle);
}

}  // namespace tprop::disentangle
