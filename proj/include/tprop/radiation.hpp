#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "tprop/dynamics.hpp"
#include "tprop/vec3.hpp"

namespace tprop::radiation {

using cd = std::complex<double>;

struct CVec3 {
    cd x{0.0, 0.0}, y{0.0, 0.0}, z{0.0, 0.0};

    CVec3() = default;
    CVec3(cd x_, cd y_, cd z_) : x(x_), y(y_), z(z_) {}
    explicit CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

    CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3& operator+=(const CVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline CVec3 operator*(cd s, const CVec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline CVec3 operator*(double s, const CVec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double norm(const CVec3& v) {
    return std::sqrt(std::norm(v.x) + std::norm(v.y) + std::norm(v.z));
}
inline double quad_norm(const CVec3& v) { return norm(v); }

// Observation geometry for the emission of a gyrating charge. The stored
// Omega is the positive gyration rate |e|B/m and the orbit sense is the
// electron one:
//   beta(t) = cos(Omega t) beta0 + sin(Omega t)(n x beta0) + (1 - cos)(n.beta0) n.
struct RadiationGeometry {
    Vec3 q;                          // unit observation direction
    Vec3 n;                          // unit B direction
    Vec3 beta0;                      // v0/c, |beta0| < 1
    double Omega = 0.0;              // rad/s, > 0
    double T_obs = 0.0;              // s, acceleration duration
    double c = 299792458.0;          // m/s
    double charge = 1.602176634e-19; // C, enters only the intensity prefactor
};

// Constant, cosine and sine coefficients of q x (q x beta(t)) along the orbit,
// plus the scalar phase coefficients c1, c2, c3.
struct HarmonicCoefficients {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    Vec3 a_vec, b_c, b_s;
};

struct SpectrumSample {
    double omega = 0.0;
    CVec3 S;
    double intensity = 0.0;  // (e^2 omega^2 / 4 pi^2 c) |S|^2
};

HarmonicCoefficients harmonic_coefficients(const RadiationGeometry& geom);

// Closed-form orbit of the geometry (electron sense, r(0) = 0).
Vec3 beta_of_t(const RadiationGeometry& geom, double t);
Vec3 r_of_t(const RadiationGeometry& geom, double t);

// Two-argument Bessel coefficient of exp(i(x sin th + y cos th)):
// B_n(x, iy) = e^{i n delta} J_n(sqrt(x^2+y^2)), delta = atan2(y, x).
// Reduces to J_n(x) at y = 0 for either sign of x.
cd generalized_bessel(int n, double x, double y);

// Harmonic expansion of the spectral integral: sum over r in [-r_max, r_max]
// of sinc lineshapes at phi_r = r Omega + omega c2. Throws TruncationWarning
// when the dropped Bessel tail exceeds 1e-8 of the accumulated norm.
CVec3 s_vector(const RadiationGeometry& geom, double omega, int r_max);

// r_max from the Bessel bandwidth of the phase argument.
int default_r_max(const RadiationGeometry& geom, double omega);

std::vector<SpectrumSample> spectrum(const RadiationGeometry& geom,
                                     const std::vector<double>& omega_grid, int r_max);

// omega_r = r Omega / (1 - (q.n)(n.beta0)), r = 1..r_max.
std::vector<double> harmonic_frequencies(const RadiationGeometry& geom, int r_max);

// Undulator view of the solenoid: (lambda_c, lambda_r) with
// lambda_c = gamma 2 pi c / omega_c0 and lambda_r ~ lambda_c / (2 r gamma^2).
std::pair<double, double> undulator_wavelengths(double gamma, double B,
                                                const dynamics::Particle& p, int r,
                                                double c);

// Chirped lineshape F_r = int_0^T exp(i(phi_r t - omega (Q.q/c) t^2)) dt with
// an electric field present; reduces to the sinc form when Q.q = 0.
cd lineshape_with_field(double phi_r, double omega, const Vec3& Q, const Vec3& q,
                        double T_obs, double c, double quad_tol);

}  // namespace tprop::radiation
