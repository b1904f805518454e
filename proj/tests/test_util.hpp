#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "tprop/oracle.hpp"
#include "tprop/vec3.hpp"

namespace testutil {

using tprop::Vec3;

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Vec3 random_vec3(std::mt19937_64& g, double lo = -1.0, double hi = 1.0) {
    return {uniform(g, lo, hi), uniform(g, lo, hi), uniform(g, lo, hi)};
}

inline Vec3 random_unit(std::mt19937_64& g) {
    Vec3 v;
    do {
        v = random_vec3(g);
    } while (tprop::norm(v) < 0.1);
    return v / tprop::norm(v);
}

inline double rel_err(const Vec3& got, const Vec3& want) {
    double scale = std::max(1e-300, tprop::norm(want));
    return tprop::norm(got - want) / scale;
}

// least-squares slope of log(err) vs log(h)
inline double loglog_slope(const std::vector<double>& h, const std::vector<double>& err) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < h.size(); ++i) {
        if (err[i] <= 0.0) continue;
        double lx = std::log(h[i]), ly = std::log(err[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++n;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// RK4 endpoint for a Vec3 ODE dv/dt = f(t, v)
inline Vec3 rk4_vec3(const std::function<Vec3(double, const Vec3&)>& f, const Vec3& v0,
                     double t_end, double dt) {
    tprop::oracle::DerivativeField field = [&](double t, std::span<const double> s,
                                               std::span<double> ds) {
        Vec3 d = f(t, {s[0], s[1], s[2]});
        ds[0] = d.x; ds[1] = d.y; ds[2] = d.z;
    };
    double s0[3] = {v0.x, v0.y, v0.z};
    auto res = tprop::oracle::rk4_integrate(field, std::span<const double>(s0, 3), t_end, dt);
    const auto& last = res.states.back();
    return {last[0], last[1], last[2]};
}

// RK4 endpoint for a 6-dim (r, v) ODE
inline std::pair<Vec3, Vec3> rk4_rv(
    const std::function<std::pair<Vec3, Vec3>(double, const Vec3&, const Vec3&)>& f,
    const Vec3& r0, const Vec3& v0, double t_end, double dt) {
    tprop::oracle::DerivativeField field = [&](double t, std::span<const double> s,
                                               std::span<double> ds) {
        auto [dr, dv] = f(t, {s[0], s[1], s[2]}, {s[3], s[4], s[5]});
        ds[0] = dr.x; ds[1] = dr.y; ds[2] = dr.z;
        ds[3] = dv.x; ds[4] = dv.y; ds[5] = dv.z;
    };
    double s0[6] = {r0.x, r0.y, r0.z, v0.x, v0.y, v0.z};
    auto res = tprop::oracle::rk4_integrate(field, std::span<const double>(s0, 6), t_end, dt);
    const auto& last = res.states.back();
    return {{last[0], last[1], last[2]}, {last[3], last[4], last[5]}};
}

}  // namespace testutil
