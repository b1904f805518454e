#include "tprop/radiation.hpp"

#include <cmath>

#include "tprop/bessel.hpp"
#include "tprop/errors.hpp"
#include "tprop/kernels.hpp"
#include "tprop/quadrature.hpp"

namespace tprop::radiation {

namespace {
constexpr cd I(0.0, 1.0);
}

HarmonicCoefficients harmonic_coefficients(const RadiationGeometry& geom) {
    const Vec3 &q = geom.q, &n = geom.n, &b0 = geom.beta0;
    Vec3 w = cross(n, b0);
    double p = dot(n, b0);
    HarmonicCoefficients hc;
    hc.c1 = dot(q, w);
    hc.c2 = 1.0 - p * dot(q, n);
    hc.c3 = p * dot(q, n) - dot(q, b0);
    hc.a_vec = p * (dot(q, n) * q - n);
    hc.b_c = dot(q, b0) * q - b0 - hc.a_vec;
    hc.b_s = hc.c1 * q - w;
    return hc;
}

Vec3 beta_of_t(const RadiationGeometry& geom, double t) {
    double th = geom.Omega * t;
    Vec3 w = cross(geom.n, geom.beta0);
    return std::cos(th) * geom.beta0 + std::sin(th) * w +
           kernels::omc(th) * dot(geom.n, geom.beta0) * geom.n;
}

Vec3 r_of_t(const RadiationGeometry& geom, double t) {
    double th = geom.Omega * t;
    Vec3 w = cross(geom.n, geom.beta0);
    double cOm = geom.c / geom.Omega;
    return cOm * (std::sin(th) * geom.beta0 + kernels::omc(th) * w +
                  (th * th * kernels::xms_x2(th)) * dot(geom.n, geom.beta0) * geom.n);
}

cd generalized_bessel(int n, double x, double y) {
    if (x == 0.0 && y == 0.0) return (n == 0) ? cd(1.0, 0.0) : cd(0.0, 0.0);
    double rho = std::hypot(x, y);
    double delta = std::atan2(y, x);
    return std::exp(I * (double(n) * delta)) * bessel_j(n, rho);
}

int default_r_max(const RadiationGeometry& geom, double omega) {
    HarmonicCoefficients hc = harmonic_coefficients(geom);
    return static_cast<int>(std::ceil(std::fabs(omega * hc.c3 / geom.Omega))) + 25;
}

CVec3 s_vector(const RadiationGeometry& geom, double omega, int r_max) {
    HarmonicCoefficients hc = harmonic_coefficients(geom);
    double x = (omega / geom.Omega) * hc.c3;
    double y = (omega / geom.Omega) * hc.c1;
    double rho = std::hypot(x, y);
    double delta = std::atan2(y, x);

    std::vector<double> J = bessel_j_sequence(r_max + 2, rho);
    auto Bk = [&](int k) -> cd {
        int ak = std::abs(k);
        double v = (ak < static_cast<int>(J.size())) ? J[ak] : 0.0;
        if (k < 0 && (ak % 2)) v = -v;
        return std::exp(I * (double(k) * delta)) * v;
    };

    CVec3 a(hc.a_vec);
    CVec3 b{cd(hc.b_c.x, hc.b_s.x), cd(hc.b_c.y, hc.b_s.y), cd(hc.b_c.z, hc.b_s.z)};
    CVec3 bconj{std::conj(b.x), std::conj(b.y), std::conj(b.z)};

    CVec3 acc;
    for (int r = -r_max; r <= r_max; ++r) {
        double phi_half = 0.5 * (r * geom.Omega + omega * hc.c2) * geom.T_obs;
        cd line = std::exp(I * phi_half) * kernels::sinc(phi_half);
        CVec3 term = 2.0 * Bk(r) * a + Bk(r - 1) * bconj + Bk(r + 1) * b;
        acc += line * term;
    }
    CVec3 S = (0.5 * geom.T_obs) * (std::exp(-I * ((omega / geom.Omega) * hc.c1)) * acc);

    // dropped-tail bound: superexponential Bessel decay past the bandwidth,
    // both tails bounded by a small multiple of the first omitted order
    double tail = 4.0 * std::fabs(J[r_max + 1]) * (2.0 * norm(a) + 2.0 * norm(b));
    if (0.5 * geom.T_obs * tail > 1e-8 * norm(S) && norm(S) > 0.0)
        throw TruncationWarning("s_vector: harmonic tail above 1e-8 of the result");
    return S;
}

std::vector<SpectrumSample> spectrum(const RadiationGeometry& geom,
                                     const std::vector<double>& omega_grid, int r_max) {
    std::vector<SpectrumSample> out;
    out.reserve(omega_grid.size());
    double pref = geom.charge * geom.charge / (4.0 * M_PI * M_PI * geom.c);
    for (double om : omega_grid) {
        SpectrumSample s;
        s.omega = om;
        s.S = s_vector(geom, om, r_max);
        double m = norm(s.S);
        s.intensity = pref * om * om * m * m;
        out.push_back(s);
    }
    return out;
}

std::vector<double> harmonic_frequencies(const RadiationGeometry& geom, int r_max) {
    double denom = 1.0 - dot(geom.q, geom.n) * dot(geom.n, geom.beta0);
    if (std::fabs(denom) < 1e-300)
        throw DegenerateGeometry("harmonic_frequencies: 1 - (q.n)(n.beta0) = 0");
    std::vector<double> out;
    out.reserve(r_max);
    for (int r = 1; r <= r_max; ++r) out.push_back(r * geom.Omega / denom);
    return out;
}

std::pair<double, double> undulator_wavelengths(double gamma, double B,
                                                const dynamics::Particle& p, int r,
                                                double c) {
    double omega_c0 = std::fabs(p.qm()) * B;
    double lambda_c = gamma * 2.0 * M_PI * c / omega_c0;
    double lambda_r = lambda_c / (2.0 * r * gamma * gamma);
    return {lambda_c, lambda_r};
}

cd lineshape_with_field(double phi_r, double omega, const Vec3& Q, const Vec3& q,
                        double T_obs, double c, double quad_tol) {
    double chirp = omega * dot(Q, q) / c;
    QuadratureOptions opt;
    opt.abs_tol = quad_tol;
    opt.min_depth =
        depth_for_phase((std::fabs(phi_r) + std::fabs(chirp) * T_obs) * T_obs);
    return adaptive_simpson(
        [&](double t) { return std::exp(I * (phi_r * t - chirp * t * t)); }, 0.0, T_obs,
        opt);
}

}  // namespace tprop::radiation
