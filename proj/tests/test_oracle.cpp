#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "tprop/errors.hpp"
#include "tprop/oracle.hpp"
#include "tprop/vop.hpp"

using namespace tprop;
using oracle::rk4_integrate;

TEST_CASE("rk4 constant field") {
    oracle::DerivativeField zero = [](double, std::span<const double> s, std::span<double> ds) {
        for (size_t i = 0; i < s.size(); ++i) ds[i] = 0.0;
    };
    double s0[2] = {1.5, -2.0};
    auto res = rk4_integrate(zero, std::span<const double>(s0, 2), 1.0, 0.01);
    CHECK(res.states.back()[0] == 1.5);
    CHECK(res.states.back()[1] == -2.0);
    CHECK(res.times.back() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rk4 unit rotation closes after a period") {
    oracle::DerivativeField rot = [](double, std::span<const double> s, std::span<double> ds) {
        ds[0] = -s[1];
        ds[1] = s[0];
    };
    double s0[2] = {1.0, 0.0};
    auto res = rk4_integrate(rot, std::span<const double>(s0, 2), 2.0 * M_PI, 1e-3);
    CHECK(std::fabs(res.states.back()[0] - 1.0) < 1e-10);
    CHECK(std::fabs(res.states.back()[1]) < 1e-10);
}

TEST_CASE("rk4 magnetic force does no work") {
    Vec3 omega{0.3, -0.2, 1.1};
    double period = 2.0 * M_PI / norm(omega);
    Vec3 v0{1.0, 0.4, -0.3};
    oracle::DerivativeField lorentz = [&](double, std::span<const double> s,
                                          std::span<double> ds) {
        Vec3 v{s[0], s[1], s[2]};
        Vec3 dv = -1.0 * cross(omega, v);
        ds[0] = dv.x; ds[1] = dv.y; ds[2] = dv.z;
    };
    double s0[3] = {v0.x, v0.y, v0.z};
    auto res = rk4_integrate(lorentz, std::span<const double>(s0, 3), 10.0 * period,
                             period / 2000.0);
    for (const auto& st : res.states) {
        double sp = std::sqrt(st[0] * st[0] + st[1] * st[1] + st[2] * st[2]);
        CHECK(std::fabs(sp - norm(v0)) < 1e-10 * norm(v0));
    }
}

TEST_CASE("rk4 is fourth order against the closed-form rotation") {
    Vec3 torque{0.5, 0.8, -0.2};
    Vec3 s0{1.0, -0.5, 0.25};
    oracle::DerivativeField field = [&](double, std::span<const double> s,
                                        std::span<double> ds) {
        Vec3 d = cross(torque, Vec3{s[0], s[1], s[2]});
        ds[0] = d.x; ds[1] = d.y; ds[2] = d.z;
    };
    double init[3] = {s0.x, s0.y, s0.z};
    auto deviation = [&](double dt) {
        auto res = rk4_integrate(field, std::span<const double>(init, 3), 6.0, dt);
        auto analytic = oracle::sample_on_grid(res.times, [&](double t) {
            Vec3 v = rodrigues_propagate(Vop(torque), t, s0);
            return std::vector<double>{v.x, v.y, v.z};
        });
        return oracle::max_deviation(res, analytic);
    };
    double e1 = deviation(0.05), e2 = deviation(0.025);
    double ratio = e1 / e2;
    CHECK(ratio > 14.0);
    CHECK(ratio < 18.0);
}

TEST_CASE("max deviation and grid checks") {
    oracle::OracleResult a;
    a.times = {0.0, 1.0, 2.0};
    a.states = {{0, 0}, {1, 1}, {2, 2}};
    oracle::OracleResult b = a;
    CHECK(oracle::max_deviation(a, b) == 0.0);
    b.states[1][0] += 1e-3;
    CHECK(oracle::max_deviation(a, b) == doctest::Approx(1e-3).epsilon(1e-12));
    b.times[1] = 1.5;
    CHECK_THROWS_AS(oracle::max_deviation(a, b), GridMismatch);
    oracle::OracleResult c;
    c.times = {0.0};
    c.states = {{0, 0}};
    CHECK_THROWS_AS(oracle::max_deviation(a, c), GridMismatch);
}

TEST_CASE("rk4 rejects divergence") {
    oracle::DerivativeField blowup = [](double, std::span<const double> s,
                                        std::span<double> ds) {
        ds[0] = s[0] * s[0];
    };
    double s0[1] = {1.0};
    CHECK_THROWS_AS(rk4_integrate(blowup, std::span<const double>(s0, 1), 10.0, 0.1),
                    NonFiniteState);
}
